// Command-line front end: sequences, family listings, bijection maps,
// generating-function expansion, and verification sweeps.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "semipart/bijections.hpp"
#include "semipart/checks.hpp"
#include "semipart/families.hpp"
#include "semipart/partition.hpp"
#include "semipart/sequences.hpp"
#include "semipart/series.hpp"

using json = nlohmann::ordered_json;
using namespace semipart;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

json partition_json(const Partition& p) {
    json out;
    out["parts"] = p.parts();
    out["overlined"] = json::array();
    return out;
}

json overpartition_json(const Overpartition& p) {
    json out;
    out["parts"] = p.base().parts();
    out["overlined"] = p.overlined();
    return out;
}

json report_json(const CheckReport& r) {
    json out;
    out["check"] = r.check;
    out["n_max"] = r.n_max;
    out["status"] = r.pass ? "pass" : "fail";
    out["counterexamples"] = r.counterexamples;
    if (!r.detail.empty()) out["detail"] = r.detail;
    return out;
}

SequenceId parse_sequence(const std::string& name) {
    if (auto id = sequence_from_name(name)) return *id;
    throw CLI::ValidationError("unknown sequence id: " + name);
}

FamilyId parse_family(const std::string& name) {
    if (auto fid = family_from_name(name)) return *fid;
    throw CLI::ValidationError("unknown family: " + name);
}

int cmd_seq(const std::string& id_name, std::uint64_t from, std::uint64_t to,
            const std::string& format) {
    SequenceId id = parse_sequence(id_name);
    if (from < min_index(id)) {
        std::cerr << "error: " << id_name << " starts at index " << min_index(id) << "\n";
        return kExitUsage;
    }
    if (to < from) {
        std::cerr << "error: empty range\n";
        return kExitUsage;
    }
    if (format == "bfile") {
        write_bfile(std::cout, id, from, to);
    } else if (format == "csv") {
        auto values = seq_range(id, from, to);
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) std::cout << ',';
            std::cout << values[i].get_str();
        }
        std::cout << '\n';
    } else if (format == "json") {
        auto values = seq_range(id, from, to);
        json out = json::array();
        for (std::size_t i = 0; i < values.size(); ++i) {
            json item;
            item["id"] = id_name;
            item["n"] = from + i;
            item["value"] = values[i].get_str();
            out.push_back(std::move(item));
        }
        std::cout << out.dump() << '\n';
    } else {
        std::cerr << "error: unknown format " << format << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

int cmd_set(const std::string& family_name_arg, std::uint64_t n, bool use_predicate,
            bool as_json) {
    FamilyId fid = parse_family(family_name_arg);
    json members = json::array();
    std::vector<std::string> lines;
    if (is_overpartition_family(fid)) {
        const auto& list = use_predicate ? oracle_over_family(fid, n, n)
                                         : build_over_family(fid, n);
        for (const auto& op : list) {
            lines.push_back(to_text(op));
            members.push_back(overpartition_json(op));
        }
    } else {
        const auto& list =
            use_predicate ? oracle_family(fid, n, n) : build_family(fid, n);
        for (const auto& p : list) {
            lines.push_back(to_text(p));
            members.push_back(partition_json(p));
        }
    }
    if (as_json) {
        json out;
        out["family"] = family_name_arg;
        out["n"] = n;
        out["members"] = std::move(members);
        std::cout << out.dump() << '\n';
    } else {
        for (const auto& line : lines) std::cout << line << '\n';
    }
    return kExitOk;
}

int cmd_map(const std::string& bij_name, const std::string& text, bool backward_dir) {
    auto bij = bijection_from_name(bij_name);
    if (!bij) {
        std::cerr << "error: unknown bijection " << bij_name << "\n";
        return kExitUsage;
    }
    // pick the element shape the map expects on the chosen side
    bool over_in;
    if (!backward_dir) {
        over_in = is_overpartition_family(source_family(*bij));
    } else {
        auto tgt = target_family(*bij);
        over_in = (*bij == BijectionId::unimodal_oc)
                      ? false
                      : (tgt && is_overpartition_family(*tgt));
    }
    Element input;
    if (*bij == BijectionId::unimodal_oc && backward_dir) {
        Composition c;
        std::string cleaned = text;
        for (char& ch : cleaned)
            if (ch == ',') ch = ' ';
        std::istringstream in(cleaned);
        for (part_t v; in >> v;) c.push_back(v);
        input = std::move(c);
    } else if (over_in) {
        input = parse_overpartition(text);
    } else {
        input = parse_partition(text);
    }
    Element out = backward_dir ? backward(*bij, input) : forward(*bij, input);
    if (const auto* p = std::get_if<Partition>(&out)) {
        std::cout << to_text(*p) << '\n';
    } else if (const auto* op = std::get_if<Overpartition>(&out)) {
        std::cout << to_text(*op) << '\n';
    } else if (const auto* c = std::get_if<Composition>(&out)) {
        std::cout << to_text(*c) << '\n';
    } else if (const auto* pair = std::get_if<BinaryPair>(&out)) {
        std::cout << to_text(pair->first) << " | " << to_text(pair->second) << '\n';
    }
    return kExitOk;
}

int cmd_gf(const std::string& id_name, std::uint64_t order, bool compare) {
    SequenceId id = parse_sequence(id_name);
    if (compare) {
        CheckReport r = compare_series_to_sequence(id, order);
        std::cout << report_json(r).dump() << '\n';
        return r.pass ? kExitOk : kExitCheckFailed;
    }
    TruncatedSeries s = closed_form_series(id, order);
    for (std::size_t i = 0; i <= s.order(); ++i) {
        if (i) std::cout << ',';
        std::cout << s.coeff(i).get_str();
    }
    std::cout << '\n';
    return kExitOk;
}

int cmd_verify(const std::string& what, std::uint64_t n_max, std::uint64_t oracle_bound,
               bool as_json) {
    std::vector<CheckReport> reports;
    if (what == "all") {
        reports = run_all(n_max, oracle_bound);
    } else {
        if (!find_check(what)) {
            std::cerr << "error: unknown check " << what << "\n";
            return kExitUsage;
        }
        reports.push_back(run_check(what, n_max));
    }
    bool all_pass = true;
    for (const auto& r : reports) {
        all_pass = all_pass && r.pass;
        if (as_json) {
            std::cout << report_json(r).dump() << '\n';
        } else {
            std::cout << (r.pass ? "pass" : "FAIL") << "  " << r.check;
            if (!r.pass) {
                std::cout << "  (" << r.detail;
                if (!r.counterexamples.empty())
                    std::cout << "; first counterexample n=" << r.counterexamples.front();
                std::cout << ")";
            }
            std::cout << '\n';
        }
    }
    return all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_oracle(const std::string& family_name_arg, std::uint64_t max_n, bool as_json) {
    FamilyId fid = parse_family(family_name_arg);
    bool all_match = true;
    for (std::uint64_t n = family_min_weight(fid); n <= max_n; ++n) {
        bool same;
        std::size_t count;
        if (is_overpartition_family(fid)) {
            auto oracle = oracle_over_family(fid, n, max_n);
            same = oracle == build_over_family(fid, n);
            count = oracle.size();
        } else {
            auto oracle = oracle_family(fid, n, max_n);
            same = oracle == build_family(fid, n);
            count = oracle.size();
        }
        all_match = all_match && same;
        if (as_json) {
            json out;
            out["family"] = family_name_arg;
            out["n"] = n;
            out["members"] = count;
            out["status"] = same ? "pass" : "fail";
            std::cout << out.dump() << '\n';
        } else {
            std::cout << (same ? "pass" : "FAIL") << "  " << family_name_arg << "(" << n
                      << ")  " << count << " members\n";
        }
    }
    return all_match ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"partition families enumerated by self-similar sequences"};
    app.require_subcommand(1);

    std::string seq_id, seq_format = "bfile";
    std::uint64_t seq_from = 0, seq_to = 0;
    auto* seq = app.add_subcommand("seq", "print sequence values");
    seq->add_option("id", seq_id, "sequence id (sf, st, spa, spa_mod, sp, snc, dsf, sl, sb, z, psf, ...)")
        ->required();
    seq->add_option("--from", seq_from, "first index")->required();
    seq->add_option("--to", seq_to, "last index")->required();
    seq->add_option("--format", seq_format, "bfile | csv | json")
        ->check(CLI::IsMember({"bfile", "csv", "json"}));

    std::string set_family;
    std::uint64_t set_n = 0;
    bool set_predicate = false, set_json = false;
    auto* set = app.add_subcommand("set", "list the members of a family at one weight");
    set->add_option("family", set_family, "family name (SF, ST, SPa, SB, HB, OB, OBbar_dag, ...)")
        ->required();
    set->add_option("n", set_n, "weight")->required();
    set->add_flag("--predicate", set_predicate,
                  "enumerate by brute-force membership predicate instead of the recursion");
    set->add_flag("--json", set_json, "JSON output");

    std::string map_bij, map_text;
    bool map_backward = false;
    auto* map = app.add_subcommand("map", "apply a bijection to one element");
    map->add_option("bijection", map_bij, "bijection name (h_st, theta_sb, xi_sp, ...)")
        ->required();
    map->add_option("element", map_text,
                    "partition text like \"5+4\" (overlines as \"4*+1\"; compositions "
                    "for unimodal_oc backward as \"2,2,8\")")
        ->required();
    map->add_flag("--backward", map_backward, "apply the inverse map");

    std::string gf_id;
    std::uint64_t gf_order = 0;
    bool gf_compare = false;
    auto* gf = app.add_subcommand("gf", "expand a closed-form generating function");
    gf->add_option("id", gf_id, "sequence id with a closed form")->required();
    gf->add_option("--order", gf_order, "truncation order")->required();
    gf->add_flag("--compare", gf_compare, "compare coefficients against the recurrence");

    std::string verify_what;
    std::uint64_t verify_max = 1000, verify_oracle = 20;
    bool verify_json = false;
    auto* verify = app.add_subcommand("verify", "run registered checks");
    verify->add_option("check", verify_what, "check tag or \"all\"")->required();
    verify->add_option("--max-n", verify_max, "sweep bound");
    verify->add_option("--oracle-bound", verify_oracle,
                       "weight bound for the brute-force oracle (with \"all\")");
    verify->add_flag("--json", verify_json, "JSON output");

    std::string oracle_family_name;
    std::uint64_t oracle_max = 20;
    bool oracle_json = false;
    auto* oracle = app.add_subcommand(
        "oracle", "compare brute-force enumeration against the recursive construction");
    oracle->add_option("family", oracle_family_name, "family name")->required();
    oracle->add_option("--max-n", oracle_max, "largest weight to compare");
    oracle->add_flag("--json", oracle_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (seq->parsed()) return cmd_seq(seq_id, seq_from, seq_to, seq_format);
        if (set->parsed()) return cmd_set(set_family, set_n, set_predicate, set_json);
        if (map->parsed()) return cmd_map(map_bij, map_text, map_backward);
        if (gf->parsed()) return cmd_gf(gf_id, gf_order, gf_compare);
        if (verify->parsed())
            return cmd_verify(verify_what, verify_max, verify_oracle, verify_json);
        if (oracle->parsed()) return cmd_oracle(oracle_family_name, oracle_max, oracle_json);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
