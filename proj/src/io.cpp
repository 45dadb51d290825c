#include "bipmin/io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace bipmin {

nlohmann::json to_json(const BiGraph& g) {
    nlohmann::json j;
    j["red"] = g.red_names();
    j["blue"] = g.blue_names();
    auto edges = nlohmann::json::array();
    for (const auto& r : g.red_names())
        for (const auto& b : g.neighbors(r))
            edges.push_back({r, b});
    j["edges"] = std::move(edges);
    return j;
}

BiGraph bigraph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("red") || !j.contains("blue"))
        fail(Err::BadParameter, "graph JSON needs \"red\" and \"blue\" arrays");
    std::vector<std::string> reds = j.at("red").get<std::vector<std::string>>();
    std::vector<std::string> blues = j.at("blue").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> edges;
    if (j.contains("edges"))
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                fail(Err::BadParameter, "edge entries must be [\"u\",\"v\"] pairs");
            edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
    return BiGraph::make(reds, blues, edges);
}

std::string to_text(const BiGraph& g) {
    std::ostringstream out;
    out << "red:";
    for (const auto& r : g.red_names()) out << ' ' << r;
    out << "\nblue:";
    for (const auto& b : g.blue_names()) out << ' ' << b;
    out << '\n';
    for (const auto& r : g.red_names())
        for (const auto& b : g.neighbors(r))
            out << r << ' ' << b << '\n';
    return out.str();
}

BiGraph bigraph_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> reds, blues;
    std::vector<std::pair<std::string, std::string>> edges;
    bool saw_red = false, saw_blue = false;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        std::vector<std::string> toks;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (toks[0] == "red:") {
            if (saw_red) fail(Err::BadParameter, "duplicate red: line");
            saw_red = true;
            reds.assign(toks.begin() + 1, toks.end());
        } else if (toks[0] == "blue:") {
            if (saw_blue) fail(Err::BadParameter, "duplicate blue: line");
            saw_blue = true;
            blues.assign(toks.begin() + 1, toks.end());
        } else if (toks.size() == 2) {
            edges.emplace_back(toks[0], toks[1]);
        } else {
            fail(Err::BadParameter, "unparsable line: '" + line + "'");
        }
    }
    if (!saw_red || !saw_blue)
        fail(Err::BadParameter, "text graph needs red: and blue: lines");
    return BiGraph::make(reds, blues, edges);
}

BiGraph read_bigraph(std::istream& in) {
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    size_t pos = text.find_first_not_of(" \t\r\n");
    if (pos == std::string::npos) fail(Err::BadParameter, "empty graph input");
    if (text[pos] == '{')
        return bigraph_from_json(nlohmann::json::parse(text));
    return bigraph_from_text(text);
}

BiGraph read_bigraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Err::BadParameter, "cannot open file: " + path);
    return read_bigraph(in);
}

} // namespace bipmin
