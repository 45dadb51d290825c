#include "bipmin/bigraph.hpp"

#include <algorithm>
#include <bit>

namespace bipmin {

const char* err_name(Err e) {
    switch (e) {
        case Err::DuplicateVertex: return "DuplicateVertex";
        case Err::UnknownEndpoint: return "UnknownEndpoint";
        case Err::MonochromaticEdge: return "MonochromaticEdge";
        case Err::SelfLoop: return "SelfLoop";
        case Err::DuplicateEdge: return "DuplicateEdge";
        case Err::UnknownVertex: return "UnknownVertex";
        case Err::UnknownEdge: return "UnknownEdge";
        case Err::DifferentSides: return "DifferentSides";
        case Err::SameVertex: return "SameVertex";
        case Err::NotACycle: return "NotACycle";
        case Err::NotAPath: return "NotAPath";
        case Err::NotAdmissible: return "NotAdmissible";
        case Err::BudgetExhausted: return "BudgetExhausted";
        case Err::SideTooSmall: return "SideTooSmall";
        case Err::IsK22: return "IsK22";
        case Err::WrongDegree: return "WrongDegree";
        case Err::NotLaman: return "NotLaman";
        case Err::MinDegreeNot3: return "MinDegreeNot3";
        case Err::BadSides: return "BadSides";
        case Err::BadParameter: return "BadParameter";
        case Err::CapExceeded: return "CapExceeded";
    }
    return "Unknown";
}

namespace {

void check_name(const std::string& name) {
    if (name.empty())
        fail(Err::BadParameter, "empty vertex name");
    for (char c : name)
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '#')
            fail(Err::BadParameter, "vertex name '" + name + "' contains whitespace or '#'");
}

} // namespace

BiGraph BiGraph::make(const std::vector<std::string>& reds,
                      const std::vector<std::string>& blues,
                      const std::vector<std::pair<std::string, std::string>>& edges) {
    BiGraph g;
    size_t n = reds.size() + blues.size();
    if (n > kMaxVertices)
        fail(Err::CapExceeded, "graph has " + std::to_string(n) + " vertices, cap is 64");
    g.names_.reserve(n);
    for (const auto& r : reds) {
        check_name(r);
        if (g.index_.count(r)) fail(Err::DuplicateVertex, r);
        g.index_[r] = static_cast<int>(g.names_.size());
        g.red_mask_ |= 1ull << g.names_.size();
        g.names_.push_back(r);
    }
    for (const auto& b : blues) {
        check_name(b);
        if (g.index_.count(b)) fail(Err::DuplicateVertex, b);
        g.index_[b] = static_cast<int>(g.names_.size());
        g.names_.push_back(b);
    }
    g.adj_.assign(n, 0);
    for (const auto& [u, v] : edges) {
        auto iu = g.index_.find(u);
        auto iv = g.index_.find(v);
        if (iu == g.index_.end()) fail(Err::UnknownEndpoint, u);
        if (iv == g.index_.end()) fail(Err::UnknownEndpoint, v);
        if (iu->second == iv->second) fail(Err::SelfLoop, u);
        if (g.red_at(iu->second) == g.red_at(iv->second))
            fail(Err::MonochromaticEdge, u + "-" + v);
        if ((g.adj_[iu->second] >> iv->second) & 1u)
            fail(Err::DuplicateEdge, u + "-" + v);
        g.adj_[iu->second] |= 1ull << iv->second;
        g.adj_[iv->second] |= 1ull << iu->second;
    }
    return g;
}

BiGraph BiGraphBuilder::build() && {
    BiGraph g;
    g.names_ = std::move(names);
    g.adj_ = std::move(adj);
    g.red_mask_ = red_mask;
    g.rebuild_index();
    return g;
}

void BiGraph::rebuild_index() {
    index_.clear();
    for (size_t i = 0; i < names_.size(); ++i)
        index_[names_[i]] = static_cast<int>(i);
}

int BiGraph::edge_count() const {
    int total = 0;
    for (auto m : adj_) total += std::popcount(m);
    return total / 2;
}

int BiGraph::red_count() const { return std::popcount(red_mask_); }

std::uint64_t BiGraph::full_bits() const {
    size_t n = names_.size();
    return n == 64 ? ~0ull : (1ull << n) - 1;
}

bool BiGraph::has_vertex(const std::string& name) const { return index_.count(name) > 0; }

int BiGraph::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) fail(Err::UnknownVertex, name);
    return it->second;
}

std::optional<int> BiGraph::find_index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool BiGraph::has_edge(const std::string& u, const std::string& v) const {
    auto iu = find_index(u);
    auto iv = find_index(v);
    if (!iu || !iv) return false;
    return (adj_[*iu] >> *iv) & 1u;
}

bool BiGraph::is_red(const std::string& name) const { return red_at(index_of(name)); }

int BiGraph::degree(const std::string& name) const { return degree_at(index_of(name)); }

int BiGraph::degree_at(int i) const { return std::popcount(adj_[static_cast<size_t>(i)]); }

std::vector<std::string> BiGraph::red_names() const {
    std::vector<std::string> out;
    for (size_t i = 0; i < names_.size(); ++i)
        if (red_at(static_cast<int>(i))) out.push_back(names_[i]);
    return out;
}

std::vector<std::string> BiGraph::blue_names() const {
    std::vector<std::string> out;
    for (size_t i = 0; i < names_.size(); ++i)
        if (!red_at(static_cast<int>(i))) out.push_back(names_[i]);
    return out;
}

std::vector<std::string> BiGraph::neighbors(const std::string& name) const {
    int i = index_of(name);
    std::vector<std::string> out;
    for (size_t j = 0; j < names_.size(); ++j)
        if ((adj_[i] >> j) & 1u) out.push_back(names_[j]);
    return out;
}

namespace {

// Rebuilds a graph keeping only vertices in `keep`, optionally rewriting
// adjacency first (for contract).
BiGraph subset_copy(const BiGraph& g, std::uint64_t keep, const std::vector<std::uint64_t>* adj_override = nullptr) {
    BiGraphBuilder b;
    int n = g.vertex_count();
    std::vector<int> newid(static_cast<size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        if (!((keep >> i) & 1u)) continue;
        newid[i] = static_cast<int>(b.names.size());
        if (g.red_at(i)) b.red_mask |= 1ull << b.names.size();
        b.names.push_back(g.name_of(i));
    }
    b.adj.assign(b.names.size(), 0);
    for (int i = 0; i < n; ++i) {
        if (newid[i] < 0) continue;
        std::uint64_t row = (adj_override ? (*adj_override)[i] : g.adj_bits(i)) & keep;
        while (row) {
            int j = std::countr_zero(row);
            row &= row - 1;
            b.adj[newid[i]] |= 1ull << newid[j];
        }
    }
    return std::move(b).build();
}

} // namespace

BiGraph BiGraph::delete_vertex(const std::string& v) const {
    int i = index_of(v);
    return subset_copy(*this, full_bits() & ~(1ull << i));
}

BiGraph BiGraph::delete_edge(const std::string& u, const std::string& v) const {
    int iu = index_of(u);
    int iv = index_of(v);
    if (!((adj_[iu] >> iv) & 1u)) fail(Err::UnknownEdge, u + "-" + v);
    BiGraph g = *this;
    g.adj_[iu] &= ~(1ull << iv);
    g.adj_[iv] &= ~(1ull << iu);
    return g;
}

BiGraph BiGraph::contract(const std::string& merge, const std::string& into) const {
    int im = index_of(merge);
    int ii = index_of(into);
    if (im == ii) fail(Err::SameVertex, merge);
    if (red_at(im) != red_at(ii)) fail(Err::DifferentSides, merge + " vs " + into);
    std::vector<std::uint64_t> adj = adj_;
    std::uint64_t merged = (adj[im] | adj[ii]) & ~(1ull << im) & ~(1ull << ii);
    adj[ii] = merged;
    for (size_t j = 0; j < adj.size(); ++j) {
        if (static_cast<int>(j) == ii) continue;
        if ((merged >> j) & 1u)
            adj[j] |= 1ull << ii;
    }
    return subset_copy(*this, full_bits() & ~(1ull << im), &adj);
}

BiGraph BiGraph::induced_subgraph(const std::vector<std::string>& keep) const {
    std::uint64_t mask = 0;
    for (const auto& name : keep)
        mask |= 1ull << index_of(name);
    return subset_copy(*this, mask);
}

BiGraph BiGraph::add_vertex(const std::string& name, bool red,
                            const std::vector<std::string>& attach) const {
    if (has_vertex(name)) fail(Err::DuplicateVertex, name);
    check_name(name);
    if (vertex_count() + 1 > kMaxVertices) fail(Err::CapExceeded, "vertex cap 64");
    BiGraphBuilder b;
    b.names = names_;
    b.adj = adj_;
    b.red_mask = red_mask_;
    int id = static_cast<int>(b.names.size());
    b.names.push_back(name);
    b.adj.push_back(0);
    if (red) b.red_mask |= 1ull << id;
    for (const auto& a : attach) {
        int ia = index_of(a);
        if (red_at(ia) == red) fail(Err::MonochromaticEdge, name + "-" + a);
        if ((b.adj[id] >> ia) & 1u) fail(Err::DuplicateEdge, name + "-" + a);
        b.adj[id] |= 1ull << ia;
        b.adj[ia] |= 1ull << id;
    }
    return std::move(b).build();
}

BiGraph BiGraph::add_edge(const std::string& u, const std::string& v) const {
    int iu = index_of(u);
    int iv = index_of(v);
    if (iu == iv) fail(Err::SelfLoop, u);
    if (red_at(iu) == red_at(iv)) fail(Err::MonochromaticEdge, u + "-" + v);
    if ((adj_[iu] >> iv) & 1u) fail(Err::DuplicateEdge, u + "-" + v);
    BiGraph g = *this;
    g.adj_[iu] |= 1ull << iv;
    g.adj_[iv] |= 1ull << iu;
    return g;
}

int BiGraph::edges_within(std::uint64_t subset) const {
    int total = 0;
    std::uint64_t rest = subset;
    while (rest) {
        int i = std::countr_zero(rest);
        rest &= rest - 1;
        total += std::popcount(adj_[i] & rest);
    }
    return total;
}

int BiGraph::components_within(std::uint64_t subset) const {
    int count = 0;
    std::uint64_t unseen = subset;
    while (unseen) {
        ++count;
        std::uint64_t frontier = unseen & (~unseen + 1); // lowest unseen bit
        std::uint64_t comp = 0;
        while (frontier) {
            comp |= frontier;
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                int i = std::countr_zero(f);
                f &= f - 1;
                next |= adj_[i] & subset;
            }
            frontier = next & ~comp;
        }
        unseen &= ~comp;
    }
    return count;
}

BiGraph::Components BiGraph::components() const {
    Components out;
    std::uint64_t unseen = full_bits();
    while (unseen) {
        std::uint64_t frontier = unseen & (~unseen + 1);
        std::uint64_t comp = 0;
        while (frontier) {
            comp |= frontier;
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                int i = std::countr_zero(f);
                f &= f - 1;
                next |= adj_[i];
            }
            frontier = next & ~comp;
        }
        std::vector<std::string> part;
        std::uint64_t c = comp;
        while (c) {
            int i = std::countr_zero(c);
            c &= c - 1;
            part.push_back(names_[i]);
        }
        out.parts.push_back(std::move(part));
        unseen &= ~comp;
    }
    out.count = static_cast<int>(out.parts.size());
    return out;
}

int BiGraph::component_count() const { return components_within(full_bits()); }

bool BiGraph::equal_labeled(const BiGraph& other) const {
    if (names_.size() != other.names_.size()) return false;
    for (size_t i = 0; i < names_.size(); ++i) {
        auto oi = other.find_index(names_[i]);
        if (!oi) return false;
        if (red_at(static_cast<int>(i)) != other.red_at(*oi)) return false;
        std::uint64_t row = adj_[i];
        if (std::popcount(row) != std::popcount(other.adj_[*oi])) return false;
        while (row) {
            int j = std::countr_zero(row);
            row &= row - 1;
            auto oj = other.find_index(names_[j]);
            if (!oj || !((other.adj_[*oi] >> *oj) & 1u)) return false;
        }
    }
    return true;
}

} // namespace bipmin
