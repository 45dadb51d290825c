#ifndef BIPMIN_CATALOG_HPP
#define BIPMIN_CATALOG_HPP

#include <string>
#include <vector>

#include "bipmin/bigraph.hpp"
#include "bipmin/minors.hpp"

namespace bipmin::catalog {

BiGraph complete_bipartite(int reds, int blues); // r1../b1..
BiGraph k22();                                    // a1,a2 / b1,b2
BiGraph k23();                                    // a1,a2 / b1,b2,b3
BiGraph k33();                                    // v1,v2,v3 / v4,v5,v6
BiGraph cycle(int length);                        // even >= 4; a1,b1,a2,b2,...
BiGraph cube_q3();                                // Q3, 3-bit vertex names

// Two-coloring of a K5 subdivision: i of the five vertices red, each
// monochromatic edge subdivided once (subdivision vertex v{ij} gets the
// opposite color). i in {5,4,2}.
BiGraph build_G(int i);
// Same for K33 with sides {v1,v2,v3} and {v4,v5,v6}; the red sets follow the
// case list: (3,3),(3,2),(3,1),(3,0),(2,2),(2,1). G(3,0) is K33 itself.
BiGraph build_Gij(int i, int j);
// Outerplanar counterparts: K4 subdivisions H(i), i in {4,3,2}, and K23
// subdivisions H(i,j) with |X|=2, |Y|=3, (i,j) in
// (2,3),(1,3),(0,3),(2,2),(1,2),(2,1).
BiGraph build_Hi(int i);
BiGraph build_Hij(int i, int j);

// n copies of K33 minus an edge glued along the missing edge's endpoints
// g1 (red) and g2 (blue): 4n+2 vertices, 8n edges. Requires n >= 2.
BiGraph build_gadget(int n);

BiGraph bary_k5(); // barycentric subdivision of K5 = G(5)

std::vector<std::string> list_names();
// Parses "K22", "C8", "Q3", "baryK5", "G(5)", "G(3,2)", "H(2,3)",
// "gadget(3)", "K(4,5)".
BiGraph build(const std::string& name);

struct AppendixCase {
    std::string name; // e.g. "G(5)", "G(3,0)"
    BiGraph host;
    MinorCertificate certificate;
};

// The nine published reduction scripts to K33, with each printed vertex
// reference resolved to the representative that survives our
// `into`-keeps-its-name contraction convention, followed by the deletions
// down to the named six vertices.
std::vector<AppendixCase> appendix_scripts();

} // namespace bipmin::catalog

#endif
