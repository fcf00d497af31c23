#include "sset/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sset {

namespace {

using nlohmann::json;

std::pair<int, int> line_col(const std::string& text, size_t byte) {
    int line = 1, col = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

json parse_json(const std::string& text, const std::string& context) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(context.empty() ? e.what() : context + ": " + e.what(), line, col);
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Word parse_word(const json& j, const std::string& where) {
    if (!j.is_array()) throw Error(where + ": word must be an array of integers");
    Word w;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw Error(where + ": word entries must be integers");
        w.push_back(v.get<int>());
    }
    if (!word_is_admissible(w))
        throw Error(where + ": word is not admissible (indices must be strictly decreasing)");
    return w;
}

}  // namespace

std::string serialize(const Presentation& p) {
    json doc;
    doc["name"] = p.name();
    if (p.has_basepoint()) doc["basepoint"] = p.basepoint_id();
    json dims = json::array();
    for (int d = 0; d <= p.top_dim(); ++d) {
        if (p.count(d) == 0) continue;
        json level;
        level["dim"] = d;
        json simplices = json::array();
        for (int idx = 0; idx < p.count(d); ++idx) {
            const Generator& g = p.generator(d, idx);
            json s;
            s["id"] = g.id;
            if (d >= 1) {
                json faces = json::array();
                for (const auto& f : g.faces) {
                    json face;
                    face["word"] = f.word;
                    face["target"] = p.generator(f.tdim, f.tidx).id;
                    faces.push_back(face);
                }
                s["faces"] = faces;
            }
            simplices.push_back(s);
        }
        level["simplices"] = simplices;
        dims.push_back(level);
    }
    doc["dimensions"] = dims;
    return doc.dump(2) + "\n";
}

Presentation parse_presentation(const std::string& text, const std::string& context) {
    json doc = parse_json(text, context);
    if (!doc.is_object()) throw Error(context + ": document must be an object");
    if (!doc.contains("name") || !doc["name"].is_string())
        throw Error(context + ": missing string field 'name'");
    PresentationBuilder b(doc["name"].get<std::string>());
    if (!doc.contains("dimensions") || !doc["dimensions"].is_array())
        throw Error(context + ": missing array field 'dimensions'");
    for (const auto& level : doc["dimensions"]) {
        if (!level.contains("dim") || !level["dim"].is_number_integer())
            throw Error(context + ": dimension entry without integer 'dim'");
        int d = level["dim"].get<int>();
        if (d < 0) throw Error(context + ": negative dimension");
        if (!level.contains("simplices") || !level["simplices"].is_array())
            throw Error(context + ": dimension entry without 'simplices'");
        for (const auto& s : level["simplices"]) {
            if (!s.contains("id") || !s["id"].is_string())
                throw Error(context + ": simplex without string 'id'");
            std::string id = s["id"].get<std::string>();
            std::vector<PresentationBuilder::PendingFace> faces;
            if (d >= 1) {
                if (!s.contains("faces") || !s["faces"].is_array())
                    throw Error(context + ": simplex '" + id + "' of dimension " +
                                std::to_string(d) + " needs " + std::to_string(d + 1) +
                                " faces");
                if (static_cast<int>(s["faces"].size()) != d + 1)
                    throw Error(context + ": simplex '" + id + "' has " +
                                std::to_string(s["faces"].size()) + " faces, expected " +
                                std::to_string(d + 1));
                for (const auto& f : s["faces"]) {
                    if (!f.contains("target") || !f["target"].is_string())
                        throw Error(context + ": face of '" + id + "' without 'target'");
                    faces.push_back({parse_word(f.contains("word") ? f["word"] : json::array(),
                                                context + ": face of '" + id + "'"),
                                     f["target"].get<std::string>()});
                }
            } else if (s.contains("faces")) {
                throw Error(context + ": vertex '" + id + "' must not carry faces");
            }
            b.add_generator(d, id, std::move(faces));
        }
    }
    if (doc.contains("basepoint")) {
        if (!doc["basepoint"].is_string()) throw Error(context + ": 'basepoint' must be a string");
        b.set_basepoint(doc["basepoint"].get<std::string>());
    }
    Presentation p = b.build();
    ValidationReport structure = p.validate_structure();
    if (!structure.ok()) throw Error(context + ": " + structure.issues.front());
    return p;
}

Presentation load_presentation(const std::string& path) {
    return parse_presentation(read_file(path), path);
}

void store_presentation(const Presentation& p, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << serialize(p);
}

SimplicialMap load_map(const std::string& path) {
    std::string text = read_file(path);
    json doc = parse_json(text, path);
    for (const char* field : {"source", "target", "assignment"})
        if (!doc.contains(field))
            throw Error(path + ": missing field '" + std::string(field) + "'");
    std::filesystem::path base = std::filesystem::path(path).parent_path();
    auto resolve = [&](const std::string& rel) {
        std::filesystem::path q(rel);
        return q.is_absolute() ? q.string() : (base / q).string();
    };
    PresPtr src = share(load_presentation(resolve(doc["source"].get<std::string>())));
    PresPtr dst = share(load_presentation(resolve(doc["target"].get<std::string>())));

    std::vector<Assignment> entries;
    for (const auto& e : doc["assignment"]) {
        if (!e.contains("from") || !e.contains("to"))
            throw Error(path + ": assignment entry needs 'from' and 'to'");
        Assignment a;
        a.from = e["from"].get<std::string>();
        a.to = e["to"].get<std::string>();
        a.word = parse_word(e.contains("word") ? e["word"] : json::array(),
                            path + ": assignment of '" + a.from + "'");
        if (e.contains("dim")) {
            a.dim = e["dim"].get<int>();
        } else {
            // resolve by id across dimensions; must be unique
            int found = -1;
            for (int d = 0; d <= src->top_dim(); ++d) {
                if (src->find(d, a.from) < 0) continue;
                if (found >= 0)
                    throw Error(path + ": '" + a.from +
                                "' exists in several dimensions; add a 'dim' field");
                found = d;
            }
            if (found < 0) throw Error(path + ": unknown source id '" + a.from + "'");
            a.dim = found;
        }
        entries.push_back(std::move(a));
    }
    SimplicialMap m = map_from_assignments(src, dst, entries);
    ValidationReport rep = m.check();
    if (!rep.ok()) throw Error(path + ": not a simplicial map: " + rep.issues.front());
    return m;
}

LiftingSquare load_square(const std::string& path) {
    std::string text = read_file(path);
    json doc = parse_json(text, path);
    std::filesystem::path base = std::filesystem::path(path).parent_path();
    auto get = [&](const char* field) {
        if (!doc.contains(field) || !doc[field].is_string())
            throw Error(path + ": missing map path '" + std::string(field) + "'");
        std::filesystem::path q(doc[field].get<std::string>());
        return load_map(q.is_absolute() ? q.string() : (base / q).string());
    };
    LiftingSquare sq{get("i"), get("p"), get("top"), get("bottom")};
    if (!(sq.top.source() == sq.i.source()) || !(sq.bottom.source() == sq.i.target()) ||
        !(sq.top.target() == sq.p.source()) || !(sq.bottom.target() == sq.p.target()))
        throw Error(path + ": the four maps do not form a square");
    if (!sq.commutes()) throw Error(path + ": the square does not commute");
    return sq;
}

void dump_corpus(const std::string& directory) {
    std::filesystem::create_directories(directory);
    for (const auto& e : corpus()) {
        std::filesystem::path p = std::filesystem::path(directory) / (e.name + ".json");
        store_presentation(*e.pres, p.string());
    }
}

}  // namespace sset
