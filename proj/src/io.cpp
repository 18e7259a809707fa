#include "chambered/io.hpp"

#include "chambered/error.hpp"

#include <fstream>
#include <sstream>

namespace chambered::io {

namespace {

int json_index(const Json& j, const char* what) {
    if (!j.is_number_integer())
        throw InputError(std::string(what) + " must be an integer");
    return j.get<int>();
}

} // namespace

InputGraph parse_graph(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("graph is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
        throw InputError("graph needs \"vertices\" and \"edges\"");
    InputGraph g;
    g.vertex_count = json_index(doc["vertices"], "\"vertices\"");
    if (g.vertex_count < 1)
        throw InputError("graph needs at least one vertex");
    const Json& edges = doc["edges"];
    if (!edges.is_array())
        throw InputError("\"edges\" must be an array");
    for (const Json& e : edges) {
        if (!e.is_array() || e.size() != 2)
            throw InputError("each edge must be a pair [i, j]");
        const int a = json_index(e[0], "edge endpoint");
        const int b = json_index(e[1], "edge endpoint");
        if (a < 1 || b < 1 || a > g.vertex_count || b > g.vertex_count)
            throw InputError("edge endpoint out of range 1.." + std::to_string(g.vertex_count));
        g.edges.emplace_back(a - 1, b - 1);
    }
    return g;
}

InputGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot read graph file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

Json graph_to_json(const InputGraph& g) {
    Json edges = Json::array();
    for (auto [a, b] : g.edges)
        edges.push_back({a + 1, b + 1});
    return Json{{"vertices", g.vertex_count}, {"edges", edges}};
}

Word parse_word(std::string_view text, int rank) {
    std::string s(text);
    for (char& c : s)
        if (c == ',')
            c = ' ';
    std::istringstream in(s);
    Word w;
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        int g = 0;
        try {
            g = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw InputError("bad generator '" + tok + "' in word");
        }
        if (used != tok.size())
            throw InputError("bad generator '" + tok + "' in word");
        if (g < 1 || g > rank)
            throw InputError("generator " + tok + " out of range 1.." + std::to_string(rank));
        w.push_back(g - 1);
    }
    return w;
}

Json word_to_json(const Word& w) {
    Json out = Json::array();
    for (int g : w)
        out.push_back(g + 1);
    return out;
}

Json matrix_to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(to_string(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json vector_to_json(const RatVector& v) {
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(to_string(x));
    return out;
}

Json vector_to_json(const IntVector& v) {
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(to_string(x));
    return out;
}

Json to_json(const GMatrix& g) {
    return Json{{"family", to_string(g.family)},
                {"word", word_to_json(g.element.word())},
                {"length", g.element.length()},
                {"matrix", matrix_to_json(g.matrix)}};
}

Json to_json(const ChamberResult& r) {
    return Json{{"family", to_string(r.family)},
                {"word", word_to_json(r.element.word())},
                {"length", r.element.length()},
                {"certificate", word_to_json(r.certificate)},
                {"transformed", vector_to_json(r.transformed)},
                {"steps", r.steps}};
}

Json to_json(const CoverageReport& r) {
    Json out{{"requested", r.requested},
             {"located", r.located},
             {"failures", r.failures},
             {"discarded_level_zero", r.discarded_level_zero},
             {"max_length", r.max_length},
             {"max_steps", r.max_steps}};
    out["first_failure"] = r.first_failure ? Json(*r.first_failure) : Json(nullptr);
    return out;
}

Json to_json(const SliceCell& c) {
    Json vertices = Json::array();
    for (const auto& v : c.vertices)
        vertices.push_back(vector_to_json(v));
    Json chart = Json::array();
    for (const auto& v : c.chart)
        chart.push_back(vector_to_json(v));
    Json walls = Json::array();
    for (const auto& w : c.walls)
        walls.push_back(Json{{"generator", w.generator + 1}, {"root", vector_to_json(w.root)}});
    return Json{{"family", to_string(c.family)},
                {"word", word_to_json(c.element.word())},
                {"vertices", vertices},
                {"chart", chart},
                {"walls", walls}};
}

Json to_json(const trunc::Presentation& p) {
    auto gens = [](const std::vector<trunc::FreeGenerator>& gs) {
        Json out = Json::array();
        for (const auto& g : gs)
            out.push_back(Json{{"vertex", g.vertex + 1}, {"degree", g.degree}});
        return out;
    };
    return Json{{"p0", p.p0},
                {"p1", p.p1},
                {"g", p.g_vector()},
                {"p0_generators", gens(p.p0_generators)},
                {"p1_generators", gens(p.p1_generators)},
                {"counted_degree", p.counted_degree},
                {"injective_differential", p.injective_differential},
                {"stabilized", p.stabilized}};
}

Json to_json(const trunc::OracleResult& r) {
    Json columns = Json::array();
    for (const auto& p : r.columns)
        columns.push_back(to_json(p));
    return Json{{"word", word_to_json(r.word)},
                {"g", matrix_to_json(r.g)},
                {"stabilized", r.stabilized},
                {"injective", r.injective},
                {"columns", columns}};
}

std::string gmatrices_to_csv(const std::vector<GMatrix>& gs) {
    std::ostringstream out;
    out << "family,word,row";
    const std::size_t n = gs.empty() ? 0 : gs.front().matrix.cols();
    for (std::size_t c = 0; c < n; ++c)
        out << ",c" << c + 1;
    out << '\n';
    for (const auto& g : gs) {
        std::string word;
        for (int s : g.element.word())
            word += (word.empty() ? "" : " ") + std::to_string(s + 1);
        for (std::size_t r = 0; r < g.matrix.rows(); ++r) {
            out << to_string(g.family) << ',' << word << ',' << r + 1;
            for (std::size_t c = 0; c < g.matrix.cols(); ++c)
                out << ',' << to_string(g.matrix(r, c));
            out << '\n';
        }
    }
    return out.str();
}

} // namespace chambered::io
