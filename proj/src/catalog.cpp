#include "bipmin/catalog.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>

namespace bipmin::catalog {

BiGraph complete_bipartite(int reds, int blues) {
    if (reds < 0 || blues < 0) fail(Err::BadParameter, "negative side size");
    std::vector<std::string> r, b;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 1; i <= reds; ++i) r.push_back("r" + std::to_string(i));
    for (int j = 1; j <= blues; ++j) b.push_back("b" + std::to_string(j));
    for (const auto& x : r)
        for (const auto& y : b) edges.emplace_back(x, y);
    return BiGraph::make(r, b, edges);
}

BiGraph k22() {
    return BiGraph::make({"a1", "a2"}, {"b1", "b2"},
                         {{"a1", "b1"}, {"a1", "b2"}, {"a2", "b1"}, {"a2", "b2"}});
}

BiGraph k23() {
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& a : {"a1", "a2"})
        for (const auto& b : {"b1", "b2", "b3"}) edges.emplace_back(a, b);
    return BiGraph::make({"a1", "a2"}, {"b1", "b2", "b3"}, edges);
}

BiGraph k33() {
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& a : {"v1", "v2", "v3"})
        for (const auto& b : {"v4", "v5", "v6"}) edges.emplace_back(a, b);
    return BiGraph::make({"v1", "v2", "v3"}, {"v4", "v5", "v6"}, edges);
}

BiGraph cycle(int length) {
    if (length < 4 || length % 2 != 0)
        fail(Err::BadParameter, "cycle length must be even and >= 4");
    int k = length / 2;
    std::vector<std::string> reds, blues;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 1; i <= k; ++i) {
        reds.push_back("a" + std::to_string(i));
        blues.push_back("b" + std::to_string(i));
    }
    for (int i = 0; i < k; ++i) {
        edges.emplace_back(reds[i], blues[i]);
        edges.emplace_back(reds[(i + 1) % k], blues[i]);
    }
    return BiGraph::make(reds, blues, edges);
}

BiGraph cube_q3() {
    std::vector<std::string> reds, blues;
    std::vector<std::pair<std::string, std::string>> edges;
    auto name = [](int v) {
        std::string s = "q";
        for (int b = 2; b >= 0; --b) s += static_cast<char>('0' + ((v >> b) & 1));
        return s;
    };
    for (int v = 0; v < 8; ++v)
        (std::popcount(static_cast<unsigned>(v)) % 2 == 0 ? reds : blues).push_back(name(v));
    for (int v = 0; v < 8; ++v)
        for (int b = 0; b < 3; ++b)
            if (v < (v ^ (1 << b))) edges.emplace_back(name(v), name(v ^ (1 << b)));
    return BiGraph::make(reds, blues, edges);
}

namespace {

std::string vname(int i) { return "v" + std::to_string(i); }

std::string subdiv_name(int i, int j) {
    if (i > j) std::swap(i, j);
    return "v" + std::to_string(i) + std::to_string(j);
}

// Shared machinery for G(i), G(i,j), H(i), H(i,j): color base vertices, then
// subdivide each monochromatic edge once with the opposite color.
BiGraph colored_subdivision(int n, const std::vector<std::pair<int, int>>& base_edges,
                            const std::vector<int>& red_vertices) {
    std::vector<bool> red(static_cast<size_t>(n + 1), false);
    for (int i : red_vertices) red[static_cast<size_t>(i)] = true;
    std::vector<std::string> reds, blues;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 1; i <= n; ++i) (red[i] ? reds : blues).push_back(vname(i));
    for (auto [i, j] : base_edges) {
        if (red[i] != red[j]) {
            edges.emplace_back(vname(i), vname(j));
        } else {
            std::string mid = subdiv_name(i, j);
            (red[i] ? blues : reds).push_back(mid);
            edges.emplace_back(vname(i), mid);
            edges.emplace_back(mid, vname(j));
        }
    }
    return BiGraph::make(reds, blues, edges);
}

std::vector<std::pair<int, int>> k5_edges() {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) e.emplace_back(i, j);
    return e;
}

std::vector<std::pair<int, int>> k33_edges() {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= 3; ++i)
        for (int j = 4; j <= 6; ++j) e.emplace_back(i, j);
    return e;
}

std::vector<std::pair<int, int>> k4_edges() {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) e.emplace_back(i, j);
    return e;
}

std::vector<std::pair<int, int>> k23_edges() {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= 2; ++i)
        for (int j = 3; j <= 5; ++j) e.emplace_back(i, j);
    return e;
}

} // namespace

BiGraph build_G(int i) {
    std::vector<int> reds;
    switch (i) {
        case 5: reds = {1, 2, 3, 4, 5}; break;
        case 4: reds = {1, 2, 3, 4}; break;
        case 2: reds = {1, 2}; break;
        default: fail(Err::BadParameter, "G(i) needs i in {5,4,2}");
    }
    return colored_subdivision(5, k5_edges(), reds);
}

BiGraph build_Gij(int i, int j) {
    std::vector<int> reds;
    if (i == 3 && j == 3) reds = {1, 2, 3, 4, 5, 6};
    else if (i == 3 && j == 2) reds = {1, 2, 3, 4, 5};
    else if (i == 3 && j == 1) reds = {1, 2, 3, 4};
    else if (i == 3 && j == 0) reds = {1, 2, 3};
    else if (i == 2 && j == 2) reds = {2, 3, 4, 5};
    else if (i == 2 && j == 1) reds = {2, 3, 4};
    else fail(Err::BadParameter, "G(i,j) not in the case list");
    return colored_subdivision(6, k33_edges(), reds);
}

BiGraph build_Hi(int i) {
    std::vector<int> reds;
    switch (i) {
        case 4: reds = {1, 2, 3, 4}; break;
        case 3: reds = {1, 2, 3}; break;
        case 2: reds = {1, 2}; break;
        default: fail(Err::BadParameter, "H(i) needs i in {4,3,2}");
    }
    return colored_subdivision(4, k4_edges(), reds);
}

BiGraph build_Hij(int i, int j) {
    std::vector<int> reds;
    if (i == 2 && j == 3) reds = {1, 2, 3, 4, 5};
    else if (i == 1 && j == 3) reds = {1, 3, 4, 5};
    else if (i == 0 && j == 3) reds = {3, 4, 5};
    else if (i == 2 && j == 2) reds = {1, 2, 3, 4};
    else if (i == 1 && j == 2) reds = {1, 3, 4};
    else if (i == 2 && j == 1) reds = {1, 2, 3};
    else fail(Err::BadParameter, "H(i,j) not in the case list");
    return colored_subdivision(5, k23_edges(), reds);
}

BiGraph build_gadget(int n) {
    if (n < 2) fail(Err::BadParameter, "gadget needs n >= 2");
    std::vector<std::string> reds{"g1"}, blues{"g2"};
    std::vector<std::pair<std::string, std::string>> edges;
    for (int k = 1; k <= n; ++k) {
        std::string s = "_" + std::to_string(k);
        std::string r2 = "r2" + s, r3 = "r3" + s, b2 = "b2" + s, b3 = "b3" + s;
        reds.push_back(r2);
        reds.push_back(r3);
        blues.push_back(b2);
        blues.push_back(b3);
        // K33 minus the edge g1-g2
        edges.emplace_back("g1", b2);
        edges.emplace_back("g1", b3);
        for (const auto& r : {r2, r3}) {
            edges.emplace_back(r, "g2");
            edges.emplace_back(r, b2);
            edges.emplace_back(r, b3);
        }
    }
    return BiGraph::make(reds, blues, edges);
}

BiGraph bary_k5() { return build_G(5); }

std::vector<std::string> list_names() {
    return {"K22",   "K23",    "K33",    "K(a,b)", "C<even>", "Q3",     "baryK5",
            "G(5)",  "G(4)",   "G(2)",   "G(3,3)", "G(3,2)",  "G(3,1)", "G(3,0)",
            "G(2,2)", "G(2,1)", "H(4)",  "H(3)",   "H(2)",    "H(2,3)", "H(1,3)",
            "H(0,3)", "H(2,2)", "H(1,2)", "H(2,1)", "gadget(n)"};
}

BiGraph build(const std::string& name) {
    if (name == "K22") return k22();
    if (name == "K23") return k23();
    if (name == "K33") return k33();
    if (name == "Q3") return cube_q3();
    if (name == "baryK5") return bary_k5();
    auto paren = [&](const std::string& prefix) -> std::optional<std::vector<int>> {
        if (name.size() < prefix.size() + 2 || name.compare(0, prefix.size(), prefix) != 0)
            return std::nullopt;
        if (name[prefix.size()] != '(' || name.back() != ')') return std::nullopt;
        std::string inner = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
        std::vector<int> args;
        size_t pos = 0;
        while (pos <= inner.size()) {
            size_t comma = inner.find(',', pos);
            std::string tok = inner.substr(pos, comma == std::string::npos ? std::string::npos
                                                                           : comma - pos);
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
                return std::nullopt;
            args.push_back(std::stoi(tok));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return args;
    };
    if (auto a = paren("G")) {
        if (a->size() == 1) return build_G((*a)[0]);
        if (a->size() == 2) return build_Gij((*a)[0], (*a)[1]);
    }
    if (auto a = paren("H")) {
        if (a->size() == 1) return build_Hi((*a)[0]);
        if (a->size() == 2) return build_Hij((*a)[0], (*a)[1]);
    }
    if (auto a = paren("gadget"); a && a->size() == 1) return build_gadget((*a)[0]);
    if (auto a = paren("K"); a && a->size() == 2) return complete_bipartite((*a)[0], (*a)[1]);
    if (name.size() > 1 && name[0] == 'C' &&
        name.find_first_not_of("0123456789", 1) == std::string::npos)
        return cycle(std::stoi(name.substr(1)));
    fail(Err::BadParameter, "unknown catalog name '" + name + "'");
}

namespace {

struct TOp {
    char kind; // 'c' contract, 'd' delete vertex
    const char* a = nullptr;
    const char* b = nullptr;
    std::vector<const char*> cycle; // as printed; cycle[1] is the common neighbor
};

struct TCase {
    const char* name;
    std::vector<TOp> ops;
    std::vector<const char*> final_reds;
    std::vector<const char*> final_blues;
};

// Verbatim transcripts; v_{ij} names normalized to i<j. A printed name may
// refer to a vertex that has since been merged away, so every reference is
// resolved through the merge map when the certificate is assembled.
const std::vector<TCase>& transcripts() {
    static const std::vector<TCase> cases = {
        {"G(5)",
         {{'c', "v15", "v13", {"v15", "v1", "v13", "v3", "v35", "v5"}},
          {'c', "v25", "v23", {"v25", "v2", "v23", "v3", "v35", "v5"}},
          {'c', "v45", "v14", {"v45", "v4", "v14", "v1", "v15", "v5"}},
          {'c', "v1", "v2", {"v1", "v12", "v2", "v25", "v5", "v15"}},
          {'c', "v3", "v4", {"v4", "v34", "v3", "v35", "v5", "v45"}}},
         {"v1", "v3", "v5"},
         {"v15", "v25", "v45"}},
        {"G(4)",
         {{'c', "v34", "v23", {"v34", "v3", "v23", "v2", "v24", "v4"}},
          {'c', "v12", "v14", {"v12", "v1", "v14", "v4", "v24", "v2"}},
          {'c', "v12", "v13", {"v12", "v1", "v13", "v3", "v23", "v2"}}},
         {"v2", "v3", "v4"},
         {"v5", "v34", "v12"}},
        {"G(2)",
         {{'c', "v34", "v35", {"v34", "v3", "v35", "v5", "v45", "v4"}}},
         {"v1", "v2", "v34"},
         {"v3", "v4", "v5"}},
        {"G(3,3)",
         {{'c', "v15", "v35", {"v15", "v5", "v35", "v3", "v34", "v4", "v14", "v1"}},
          {'c', "v14", "v24", {"v14", "v4", "v24", "v2", "v26", "v6", "v16", "v1"}},
          {'c', "v26", "v36", {"v26", "v6", "v36", "v3", "v34", "v4", "v24", "v2"}},
          {'c', "v1", "v6", {"v1", "v16", "v6", "v36", "v2", "v24"}},
          {'c', "v2", "v5", {"v2", "v25", "v5", "v35", "v3", "v34", "v4", "v24"}},
          {'d', "v16", nullptr, {}},
          {'d', "v25", nullptr, {}},
          {'c', "v3", "v4", {"v3", "v34", "v4", "v24", "v1", "v36"}}},
         {"v1", "v2", "v3"},
         {"v15", "v14", "v26"}},
        {"G(3,2)",
         {{'c', "v15", "v35", {"v15", "v5", "v35", "v3", "v34", "v4", "v14", "v1"}},
          {'c', "v14", "v24", {"v14", "v4", "v24", "v2", "v25", "v5", "v15", "v1"}},
          {'c', "v3", "v4", {"v3", "v34", "v4", "v24", "v2", "v25", "v5", "v15"}},
          {'c', "v2", "v5", {"v2", "v25", "v5", "v15", "v1", "v6"}}},
         {"v1", "v2", "v3"},
         {"v15", "v14", "v6"}},
        {"G(3,1)",
         {{'c', "v24", "v34", {"v24", "v4", "v34", "v3", "v5", "v2"}},
          {'c', "v1", "v4", {"v1", "v14", "v4", "v34", "v3", "v5"}}},
         {"v1", "v2", "v3"},
         {"v24", "v5", "v6"}},
        {"G(2,2)",
         {{'c', "v24", "v34", {"v34", "v4", "v24", "v2", "v25", "v5", "v35", "v3"}},
          {'c', "v25", "v35", {"v25", "v5", "v35", "v3", "v34", "v2"}},
          {'c', "v4", "v5", {"v4", "v1", "v5", "v25", "v3", "v34"}},
          {'c', "v1", "v6", {"v1", "v16", "v6", "v2", "v25", "v4"}}},
         {"v2", "v3", "v4"},
         {"v24", "v25", "v6"}},
        {"G(2,1)",
         {{'c', "v16", "v15", {"v16", "v1", "v15", "v5", "v3", "v6"}},
          {'c', "v24", "v34", {"v24", "v4", "v34", "v3", "v6", "v2"}},
          {'c', "v1", "v34", {"v1", "v4", "v34", "v2", "v5", "v15"}}},
         {"v16", "v2", "v3"},
         {"v1", "v5", "v6"}},
        {"G(3,0)", {}, {"v1", "v2", "v3"}, {"v4", "v5", "v6"}},
    };
    return cases;
}

BiGraph case_host(const std::string& name) {
    if (name == "G(5)") return build_G(5);
    if (name == "G(4)") return build_G(4);
    if (name == "G(2)") return build_G(2);
    if (name == "G(3,3)") return build_Gij(3, 3);
    if (name == "G(3,2)") return build_Gij(3, 2);
    if (name == "G(3,1)") return build_Gij(3, 1);
    if (name == "G(2,2)") return build_Gij(2, 2);
    if (name == "G(2,1)") return build_Gij(2, 1);
    if (name == "G(3,0)") return build_Gij(3, 0);
    fail(Err::BadParameter, "unknown appendix case " + name);
}

} // namespace

std::vector<AppendixCase> appendix_scripts() {
    std::vector<AppendixCase> out;
    BiGraph target = k33();
    for (const TCase& tc : transcripts()) {
        AppendixCase ac;
        ac.name = tc.name;
        ac.host = case_host(tc.name);

        std::map<std::string, std::string> rep;
        auto resolve = [&](std::string name) {
            for (auto it = rep.find(name); it != rep.end(); it = rep.find(name))
                name = it->second;
            return name;
        };

        BiGraph g = ac.host;
        MinorCertificate cert;
        cert.host = ac.host;
        cert.target = target;
        for (const TOp& top : tc.ops) {
            if (top.kind == 'd') {
                std::string v = resolve(top.a);
                cert.ops.push_back(MinorOp::del_vertex(v));
                g = g.delete_vertex(v);
                continue;
            }
            std::string merge = resolve(top.a);
            std::string into = resolve(top.b);
            CycleWitness w;
            for (const char* c : top.cycle) w.cycle.push_back(resolve(c));
            w.common = w.cycle[1];
            cert.ops.push_back(MinorOp::contract(merge, into, std::move(w)));
            g = g.contract(merge, into);
            rep[merge] = into;
        }

        std::vector<std::string> keep;
        for (const char* r : tc.final_reds) keep.push_back(resolve(r));
        for (const char* b : tc.final_blues) keep.push_back(resolve(b));
        std::vector<std::string> drop;
        for (const auto& v : g.all_names())
            if (std::find(keep.begin(), keep.end(), v) == keep.end()) drop.push_back(v);
        std::sort(drop.begin(), drop.end());
        for (const auto& v : drop) cert.ops.push_back(MinorOp::del_vertex(v));

        std::unordered_map<std::string, std::string> fm;
        for (size_t i = 0; i < 3; ++i) {
            fm[resolve(tc.final_reds[i])] = "v" + std::to_string(i + 1);
            fm[resolve(tc.final_blues[i])] = "v" + std::to_string(i + 4);
        }
        cert.final_map = std::move(fm);
        ac.certificate = std::move(cert);
        out.push_back(std::move(ac));
    }
    return out;
}

} // namespace bipmin::catalog
