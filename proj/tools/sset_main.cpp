// Command-line surface over the library: every command is a thin composition
// of library operations.  Exit codes: 0 success/verified, 1 property failure
// (with a witness), 2 usage or parse errors.
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sset/homology.hpp"
#include "sset/io.hpp"
#include "sset/telescope.hpp"
#include "sset/verify.hpp"

using namespace sset;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;

PrimeSet prime_set_from(const std::string& invert, bool rational) {
    if (rational) return PrimeSet::rationals();
    if (invert.empty()) return PrimeSet::none();
    std::vector<Int> gens;
    std::stringstream ss(invert);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        gens.push_back(Int(item));
    }
    return PrimeSet::from_multiplicative_set(gens);
}

std::vector<long long> parse_multipliers(const std::string& csv) {
    std::vector<long long> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoll(item));
    }
    return out;
}

json groups_to_json(const std::vector<FGAbGroup>& groups) {
    json out = json::array();
    for (size_t n = 0; n < groups.size(); ++n) {
        json g;
        g["degree"] = n;
        g["rank"] = groups[n].rank;
        json tor = json::array();
        for (const auto& t : groups[n].torsion) tor.push_back(t.str());
        g["torsion"] = tor;
        out.push_back(g);
    }
    return out;
}

int cmd_validate(const std::string& file, bool as_json) {
    Presentation p = load_presentation(file);
    ValidationReport rep = p.validate();
    if (as_json) {
        json out;
        out["file"] = file;
        out["ok"] = rep.ok();
        out["issues"] = rep.issues;
        std::cout << out.dump(2) << "\n";
    } else if (rep.ok()) {
        std::cout << "ok: " << p.name() << " is a valid presentation\n";
    } else {
        std::cout << "invalid: " << p.name() << "\n" << rep.to_string();
    }
    return rep.ok() ? kExitOk : kExitPropertyFailure;
}

int cmd_info(const std::string& file, bool as_json) {
    Presentation p = load_presentation(file);
    ValidationReport rep = p.validate();
    std::vector<int> counts;
    for (int d = 0; d <= p.top_dim(); ++d) counts.push_back(p.count(d));
    if (as_json) {
        json out;
        out["name"] = p.name();
        out["valid"] = rep.ok();
        out["counts"] = counts;
        out["euler_characteristic"] = euler_characteristic(p);
        out["one_reduced"] = is_one_reduced(p);
        if (p.has_basepoint()) out["basepoint"] = p.basepoint_id();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "name: " << p.name() << "\n";
        std::cout << "valid: " << (rep.ok() ? "yes" : "no") << "\n";
        std::cout << "non-degenerate generators by dimension:";
        for (int c : counts) std::cout << " " << c;
        std::cout << "\n";
        std::cout << "euler characteristic: " << euler_characteristic(p) << "\n";
        std::cout << "1-reduced: " << (is_one_reduced(p) ? "yes" : "no") << "\n";
        if (p.has_basepoint()) std::cout << "basepoint: " << p.basepoint_id() << "\n";
    }
    return rep.ok() ? kExitOk : kExitPropertyFailure;
}

int cmd_homology(const std::string& file, const std::string& invert, bool rational,
                 bool as_json) {
    Presentation p = load_presentation(file);
    PrimeSet ps = prime_set_from(invert, rational);
    std::vector<FGAbGroup> groups =
        (ps.all || !ps.primes.empty()) ? homology_localized(p, ps) : homology_Z(p);
    if (as_json) {
        json out;
        out["name"] = p.name();
        out["coefficients"] = ps.to_string();
        out["homology"] = groups_to_json(groups);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "homology of " << p.name() << " with " << ps.to_string() << "\n";
        for (size_t n = 0; n < groups.size(); ++n)
            std::cout << "  H_" << n << " = " << groups[n].to_string() << "\n";
    }
    return kExitOk;
}

int cmd_pi1(const std::string& file, const std::string& base, bool as_json) {
    Presentation p = load_presentation(file);
    GroupPresentation g = pi1_presentation(p, base);
    FGAbGroup ab = abelianization(g);
    if (as_json) {
        json out;
        out["name"] = p.name();
        out["generators"] = g.generators;
        json rels = json::array();
        for (const auto& rel : g.relators) rels.push_back(rel);
        out["relators"] = rels;
        out["abelianization"] = ab.to_string();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "edge-path presentation of pi_1(" << p.name() << "): " << g.to_string()
                  << "\n";
        std::cout << "abelianization: " << ab.to_string() << "\n";
    }
    return kExitOk;
}

int cmd_transform(const std::string& which, const std::string& file, const std::string& out_path,
                  int max_dim) {
    PresPtr p = share(load_presentation(file));
    Presentation result;
    if (which == "skeleton1") {
        result = *skeleton1(p).pres;
    } else if (which == "coskeleton1") {
        result = *coskeleton1(p, max_dim).pres;
    } else if (which == "reduce1") {
        result = *reduce1(p).pres;
    } else {
        result = *eilenberg1(p).pres;
    }
    store_presentation(result, out_path);
    std::cout << "wrote " << out_path << "\n";
    return kExitOk;
}

int cmd_kan(const std::string& file, int max_dim, bool as_json) {
    PresPtr p = share(load_presentation(file));
    KanResult k = is_kan_up_to(p, max_dim);
    if (as_json) {
        json out;
        out["name"] = p->name();
        out["max_dim"] = max_dim;
        out["kan_up_to"] = k.kan;
        if (k.witness) {
            json w;
            w["n"] = k.witness->n;
            w["k"] = k.witness->k;
            json faces = json::array();
            for (const auto& f : k.witness->face_images) faces.push_back(p->ref_string(f));
            w["faces"] = faces;
            out["witness"] = w;
        }
        std::cout << out.dump(2) << "\n";
    } else if (k.kan) {
        std::cout << p->name() << " fills every horn up to dimension " << max_dim << "\n";
    } else {
        std::cout << p->name() << " is not a Kan complex: the horn (" << k.witness->n << ","
                  << k.witness->k << ") with faces";
        for (const auto& f : k.witness->face_images) std::cout << " " << p->ref_string(f);
        std::cout << " has no filler\n";
    }
    return k.kan ? kExitOk : kExitPropertyFailure;
}

int cmd_lift(const std::string& file, bool as_json) {
    LiftingSquare sq = load_square(file);
    std::optional<SimplicialMap> lift = solve_lifting(sq);
    if (as_json) {
        json out;
        out["solvable"] = lift.has_value();
        if (lift) {
            json a = json::array();
            const Presentation& b = lift->source();
            for (int d = 0; d <= b.top_dim(); ++d)
                for (int idx = 0; idx < b.count(d); ++idx) {
                    json e;
                    e["from"] = b.generator(d, idx).id;
                    e["dim"] = d;
                    e["to"] = lift->target().generator(lift->image(d, idx).tdim,
                                                       lift->image(d, idx).tidx).id;
                    e["word"] = lift->image(d, idx).word;
                    a.push_back(e);
                }
            out["lift"] = a;
        }
        std::cout << out.dump(2) << "\n";
    } else if (lift) {
        std::cout << "lift found:\n";
        const Presentation& b = lift->source();
        for (int d = 0; d <= b.top_dim(); ++d)
            for (int idx = 0; idx < b.count(d); ++idx)
                std::cout << "  " << b.generator(d, idx).id << " -> "
                          << lift->target().ref_string(lift->image(d, idx)) << "\n";
    } else {
        std::cout << "no lift exists\n";
    }
    return lift ? kExitOk : kExitPropertyFailure;
}

int cmd_rlp(const std::string& p_file, const std::string& i_file, bool as_json) {
    SimplicialMap p = load_map(p_file);
    SimplicialMap i = load_map(i_file);
    RlpResult r = has_rlp(p, i);
    if (as_json) {
        json out;
        out["holds"] = r.holds;
        std::cout << out.dump(2) << "\n";
    } else if (r.holds) {
        std::cout << "the map has the right lifting property against the given map "
                     "(exhaustive bounded search)\n";
    } else {
        std::cout << "right lifting property fails: an unsolvable square exists\n";
    }
    return r.holds ? kExitOk : kExitPropertyFailure;
}

int cmd_weq(const std::string& map_file, const std::string& invert, bool rational,
            bool as_json) {
    SimplicialMap f = load_map(map_file);
    PrimeSet ps = prime_set_from(invert, rational);
    LocalIsoReport rep = is_local_weq_one_reduced(f, ps);
    if (as_json) {
        json out;
        out["coefficients"] = ps.to_string();
        out["weak_equivalence"] = rep.holds;
        json degrees = json::array();
        for (const auto& d : rep.degrees) {
            json e;
            e["degree"] = d.n;
            e["cone_homology"] = d.cone.to_string();
            e["after_localization"] = d.localized.to_string();
            degrees.push_back(e);
        }
        out["cone"] = degrees;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << (rep.holds ? "weak equivalence" : "not a weak equivalence")
                  << " for the localized structure with " << ps.to_string() << "\n";
        for (const auto& d : rep.degrees)
            if (!d.cone.trivial())
                std::cout << "  cone H_" << d.n << " = " << d.cone.to_string() << ", localizes to "
                          << d.localized.to_string() << "\n";
    }
    return rep.holds ? kExitOk : kExitPropertyFailure;
}

int cmd_telescope(int n, const std::string& multipliers_csv, int k, const std::string& invert,
                  bool rational, bool invert_given, bool as_json) {
    std::vector<long long> ms = parse_multipliers(multipliers_csv);
    TelescopeStage st = telescope_stage(n, ms, k);
    std::vector<FGAbGroup> h = homology(st.complex);
    Int degree = inclusion_degree(st);

    json out;
    out["n"] = n;
    out["stage"] = k;
    out["inclusion_degree"] = degree.str();
    out["homology"] = groups_to_json(h);
    bool verdict = true;
    if (invert_given || rational) {
        PrimeSet ps = prime_set_from(invert, rational);
        StageInclusionReport rep = stage_inclusion_is_local_iso(st, ps);
        verdict = rep.is_local_iso;
        out["coefficients"] = ps.to_string();
        out["local_isomorphism"] = rep.is_local_iso;
        out["multiplier_primes_inverted"] = rep.multipliers_invertible;
        if (!rep.multipliers_invertible && !as_json)
            std::cout << "note: some multiplier prime is not inverted; the verdict below is "
                         "the honest cone computation\n";
    }
    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "telescope stage " << k << " of the " << n << "-sphere, multipliers";
        for (int j = 0; j < k; ++j) std::cout << " " << ms[j];
        std::cout << "\n";
        for (size_t d = 0; d < h.size(); ++d)
            if (!h[d].trivial()) std::cout << "  H_" << d << " = " << h[d].to_string() << "\n";
        std::cout << "  inclusion degree: " << degree.str() << "\n";
        if (out.contains("local_isomorphism"))
            std::cout << "  local homology isomorphism: "
                      << (verdict ? "yes" : "no") << " with " << out["coefficients"].get<std::string>()
                      << "\n";
    }
    return verdict ? kExitOk : kExitPropertyFailure;
}

int cmd_verify_paper(int max_dim, bool as_json) {
    std::vector<CheckResult> results = verify_paper({max_dim});
    bool all = true;
    json arr = json::array();
    for (const auto& c : results) {
        all &= c.pass;
        if (as_json) {
            json e;
            e["id"] = c.id;
            e["pass"] = c.pass;
            e["description"] = c.description;
            e["detail"] = c.detail;
            arr.push_back(e);
        } else {
            std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.id;
            if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
            std::cout << "\n";
        }
    }
    if (as_json) {
        json out;
        out["checks"] = arr;
        out["verified"] = all;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << (all ? "all checks verified" : "some checks FAILED") << "\n";
    }
    return all ? kExitOk : kExitPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite simplicial sets: exact constructions, lifting searches, and "
                 "localized homology"};
    app.require_subcommand(1);

    std::string file, out_path, invert, p_file, i_file, base, multipliers;
    bool rational = false, as_json = false;
    int max_dim = 4, tele_n = 2, tele_k = 0;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option_function<std::string>(
            "--format",
            [&](const std::string& v) {
                if (v == "json")
                    as_json = true;
                else if (v != "text")
                    throw CLI::ValidationError("--format must be text or json");
            },
            "output format: text (default) or json");
    };

    CLI::App* validate = app.add_subcommand("validate", "check a presentation file");
    validate->add_option("file", file)->required();
    add_format(validate);

    CLI::App* info = app.add_subcommand("info", "counts, Euler characteristic, flags");
    info->add_option("file", file)->required();
    add_format(info);

    CLI::App* homology_cmd = app.add_subcommand("homology", "exact (localized) homology");
    homology_cmd->add_option("file", file)->required();
    homology_cmd->add_option("--invert", invert, "comma-separated multiplicative set");
    homology_cmd->add_flag("--rational", rational, "invert every prime");
    add_format(homology_cmd);

    CLI::App* pi1 = app.add_subcommand("pi1", "edge-path fundamental group presentation");
    pi1->add_option("file", file)->required();
    pi1->add_option("--base", base, "base vertex id");
    add_format(pi1);

    for (const char* which : {"skeleton1", "coskeleton1", "reduce1", "eilenberg1"}) {
        CLI::App* t = app.add_subcommand(which, std::string("write the ") + which +
                                                    " of a presentation");
        t->add_option("file", file)->required();
        t->add_option("-o,--output", out_path)->required();
        if (std::string(which) == "coskeleton1")
            t->add_option("--max-dim", max_dim, "materialization bound")->required();
    }

    CLI::App* kan = app.add_subcommand("kan", "bounded Kan condition with witness");
    kan->add_option("file", file)->required();
    kan->add_option("--max-dim", max_dim)->required();
    add_format(kan);

    CLI::App* lift = app.add_subcommand("lift", "solve the lifting problem in a square file");
    lift->add_option("square", file)->required();
    add_format(lift);

    CLI::App* rlp = app.add_subcommand("rlp", "bounded right-lifting-property verdict");
    rlp->add_option("--p", p_file, "map file of p")->required();
    rlp->add_option("--i", i_file, "map file of i")->required();
    add_format(rlp);

    CLI::App* weq = app.add_subcommand(
        "weq", "localized weak-equivalence decision for maps of 1-reduced complexes");
    weq->add_option("map", file, "map file")->required();
    weq->add_option("--invert", invert, "comma-separated multiplicative set");
    weq->add_flag("--rational", rational);
    add_format(weq);

    CLI::App* telescope = app.add_subcommand("telescope", "localized-sphere telescope stage");
    telescope->add_option("-n", tele_n, "sphere dimension")->required();
    telescope->add_option("-m,--multipliers", multipliers, "comma-separated multipliers");
    telescope->add_option("-k", tele_k, "stage")->required();
    CLI::Option* tele_invert = telescope->add_option("--invert", invert);
    telescope->add_flag("--rational", rational);
    add_format(telescope);

    CLI::App* verify = app.add_subcommand("verify-paper", "replay every finitely checkable statement");
    verify->add_option("--max-dim", max_dim, "bound for horn and lifting searches");
    add_format(verify);

    CLI::App* dump = app.add_subcommand("dump-corpus", "write the corpus as canonical files");
    dump->add_option("-o,--output", out_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (validate->parsed()) return cmd_validate(file, as_json);
        if (info->parsed()) return cmd_info(file, as_json);
        if (homology_cmd->parsed()) return cmd_homology(file, invert, rational, as_json);
        if (pi1->parsed()) return cmd_pi1(file, base, as_json);
        for (const char* which : {"skeleton1", "coskeleton1", "reduce1", "eilenberg1"})
            if (app.get_subcommand(which)->parsed())
                return cmd_transform(which, file, out_path, max_dim);
        if (kan->parsed()) return cmd_kan(file, max_dim, as_json);
        if (lift->parsed()) return cmd_lift(file, as_json);
        if (rlp->parsed()) return cmd_rlp(p_file, i_file, as_json);
        if (weq->parsed()) return cmd_weq(file, invert, rational, as_json);
        if (telescope->parsed())
            return cmd_telescope(tele_n, multipliers, tele_k, invert, rational,
                                 tele_invert->count() > 0 || rational, as_json);
        if (verify->parsed()) return cmd_verify_paper(max_dim, as_json);
        if (dump->parsed()) {
            dump_corpus(out_path);
            std::cout << "wrote corpus to " << out_path << "\n";
            return kExitOk;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const TooLargeError& e) {
        std::cerr << "too large: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
