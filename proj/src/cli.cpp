#include "nmds/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "nmds/json_io.hpp"

namespace nmds {

namespace {

struct Options {
    bool json = false;
    std::string notation = "power";
    std::uint64_t seed = 1;
    Caps caps;
    std::uint64_t max_exponent = kDefaultMaxExponent;

    std::string field;
    std::string x, y, l, theta, disc = "n-1", target = "mds";
    bool no_verify = false;
    bool verify = false;

    std::size_t n = 0;
    std::string m_range;
    std::string matrix_file;
    std::string expect;
    bool profile = false;
    std::size_t r = 0;
    std::string family;
    std::string poly, roots;
};

Notation notation_of(const Options& o) {
    if (o.notation == "power") return Notation::Power;
    if (o.notation == "hex") return Notation::Hex;
    raise(ErrorKind::ParseError, "notation must be power or hex");
}

std::string join_indices(const std::vector<std::size_t>& zero_based) {
    std::string s = "{";
    for (std::size_t i = 0; i < zero_based.size(); ++i) s += (i ? "," : "") + std::to_string(zero_based[i] + 1);
    return s + "}";
}

std::string format_list(const Field& f, const std::vector<Rep>& v, Notation nt) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + f.format_rep(v[i], nt);
    return s;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
    auto number = [&](std::string_view s) -> std::uint64_t {
        std::uint64_t v = 0;
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
            raise(ErrorKind::ParseError, "bad exponent range '" + text + "'");
        for (char c : s) v = v * 10 + static_cast<std::uint64_t>(c - '0');
        return v;
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const auto v = number(text);
        return {v, v};
    }
    const auto lo = number(std::string_view(text).substr(0, dots));
    const auto hi = number(std::string_view(text).substr(dots + 2));
    if (lo > hi) raise(ErrorKind::ParseError, "empty exponent range '" + text + "'");
    return {lo, hi};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(ErrorKind::ParseError, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Text matrix, a JSON array of rows, or a JSON document with a "matrix" key
/// (and optionally "field", used when --field is absent).
std::pair<Field, FieldMatrix> load_matrix(const Options& o) {
    const std::string text = read_file(o.matrix_file);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
        Json doc;
        try {
            doc = Json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            raise(ErrorKind::ParseError, std::string("bad JSON: ") + e.what());
        }
        std::string fspec = o.field;
        if (doc.is_object()) {
            if (fspec.empty() && doc.contains("field") && doc["field"].is_string()) fspec = doc["field"].get<std::string>();
            if (!doc.contains("matrix")) raise(ErrorKind::ParseError, "JSON document has no \"matrix\"");
            doc = doc["matrix"];
        }
        if (fspec.empty()) raise(ErrorKind::ParseError, "--field is required");
        Field f = Field::parse(fspec);
        return {f, matrix_from_json(f, doc)};
    }
    if (o.field.empty()) raise(ErrorKind::ParseError, "--field is required");
    Field f = Field::parse(o.field);
    return {f, parse_matrix_text(f, text)};
}

Field require_field(const Options& o) {
    if (o.field.empty()) raise(ErrorKind::ParseError, "--field is required");
    return Field::parse(o.field);
}

void print_report_text(std::ostream& out, const CodeReport& rep) {
    out << "code: [" << rep.n << ", " << rep.k << "], d1 = " << rep.d1;
    if (rep.d2) out << ", d2 = " << *rep.d2;
    out << "\nverdict: " << to_string(rep.verdict) << "\n";
    for (const auto& w : rep.witnesses) out << "witness " << w.clause << ": columns " << join_indices(w.columns) << "\n";
    if (!rep.dr_profile.empty()) {
        out << "profile:";
        for (auto d : rep.dr_profile) out << " " << d;
        out << "\n";
    }
}

void print_conditions_text(std::ostream& out, const ConditionReport& c) {
    out << "conditions: mode " << to_string(c.mode) << ", " << c.subsets << " subsets, " << c.zero_count << " zero";
    if (c.witness) out << ", first zero " << join_indices(*c.witness);
    out << "\n";
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------

int cmd_construct_gvand(const Options& o, std::ostream& out) {
    const Field f = require_field(o);
    const Notation nt = notation_of(o);
    const XYSpec spec(f, parse_rep_list(f, o.x), parse_rep_list(f, o.y), parse_disc(o.disc));
    const Target target = parse_target(o.target);
    const Construction c = construct(spec, target, !o.no_verify, o.caps);
    std::optional<CodeReport> rep;
    if (!o.no_verify) rep = classify(standard_generator(c.matrix), o.caps);

    if (o.json) {
        emit_json(out, construction_to_json(spec, target, c, rep, nt));
        return kExitOk;
    }
    out << "field: " << f.to_string() << "\n";
    out << "x = (" << format_list(f, spec.x(), nt) << "), y = (" << format_list(f, spec.y(), nt) << "), I = {"
        << to_string(spec.disc()) << "}\n";
    print_conditions_text(out, c.conditions);
    out << "V1^-1 V2:\n" << format_matrix_text(c.matrix, nt) << "V2^-1 V1:\n" << format_matrix_text(c.inverse_direction, nt);
    if (rep) print_report_text(out, *rep);
    out << "verified: " << (c.verified ? "yes" : "no") << "\n";
    return kExitOk;
}

int cmd_construct_involutory(const Options& o, std::ostream& out) {
    const Field f = require_field(o);
    const Notation nt = notation_of(o);
    const auto x = parse_rep_list(f, o.x);
    const Rep l = f.parse_rep(o.l);
    const Target target = parse_target(o.target);
    const InvolutoryConstruction c = construct_involutory(f, x, l, target, !o.no_verify, o.caps);
    std::optional<CodeReport> rep;
    if (!o.no_verify) rep = classify(standard_generator(c.base.matrix), o.caps);

    if (o.json) {
        emit_json(out, involutory_to_json(x, l, target, c, rep, nt));
        return kExitOk;
    }
    out << "field: " << f.to_string() << "\n";
    out << "x = (" << format_list(f, x, nt) << "), l = " << f.format_rep(l, nt) << ", y = (" << format_list(f, c.y, nt)
        << ")\n";
    print_conditions_text(out, c.base.conditions);
    out << "A:\n" << format_matrix_text(c.base.matrix, nt);
    out << "A^2 = I: " << (c.involutory ? "yes" : "no") << "\n";
    out << "V2 V1^-1 lower triangular: " << (c.lower_triangular ? "yes" : "no") << "\n";
    if (rep) print_report_text(out, *rep);
    out << "verified: " << (c.base.verified ? "yes" : "no") << "\n";
    return kExitOk;
}

int cmd_recursive(const Options& o, Family family, std::ostream& out, std::ostream& err) {
    const Field f = require_field(o);
    const Notation nt = notation_of(o);
    const Rep theta = f.parse_rep(o.theta);
    const auto [lo, hi] = parse_range(o.m_range);
    if (hi > o.max_exponent) raise(ErrorKind::TooLarge, "exponent " + std::to_string(hi) + " exceeds the scan cap");

    // Without --verify a fixed-seed sample of at most five exponents is checked.
    std::set<std::uint64_t> checked;
    if (o.verify) {
        for (auto m = lo; m <= hi; ++m) checked.insert(m);
    } else {
        std::vector<std::uint64_t> all;
        for (auto m = lo; m <= hi; ++m) all.push_back(m);
        std::mt19937_64 rng(o.seed);
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(std::min<std::size_t>(all.size(), 5));
        checked.insert(all.begin(), all.end());
        err << "spot-check seed=" << o.seed << " m=";
        bool first = true;
        for (auto m : checked) err << (first ? "" : ",") << m, first = false;
        err << "\n";
    }

    std::vector<ThetaConstruction> rows;
    for (auto m = lo; m <= hi; ++m) rows.push_back(construct_theta(family, f, theta, o.n, m, checked.count(m) > 0, o.caps));
    const ThetaConstruction& head = rows.front();

    if (o.json) {
        Json j;
        j["schema"] = kSchemaVersion;
        j["command"] = "recursive";
        j["family"] = std::string(to_string(family));
        j["field"] = f.to_string();
        j["theta"] = f.format_rep(theta, nt);
        j["n"] = o.n;
        j["roots"] = elements_to_json(f, head.family.lambdas, nt);
        j["poly"] = head.g.to_string();
        Json table = Json::object(), verified = Json::object(), witnesses = Json::object();
        for (const auto& r : rows) {
            const auto key = std::to_string(r.m);
            table[key] = std::string(to_string(r.verdict));
            if (r.verified) verified[key] = std::string(to_string(*r.verified));
            witnesses[key] = r.conditions.witness ? indices_to_json(*r.conditions.witness) : Json(nullptr);
        }
        j["table"] = std::move(table);
        j["verified"] = std::move(verified);
        j["witnesses"] = std::move(witnesses);
        emit_json(out, j);
        return kExitOk;
    }
    out << "family: " << to_string(family) << ", theta = " << f.format_rep(theta, nt) << ", n = " << o.n << "\n";
    out << "roots: (" << format_list(f, head.family.lambdas, nt) << ")\n";
    out << "g(x) = " << head.g.to_string() << "\n";
    for (const auto& r : rows) {
        out << "m = " << r.m << ": " << to_string(r.verdict);
        if (r.conditions.witness) out << " witness E" << join_indices(*r.conditions.witness);
        if (r.verified) out << " (C_g^m is " << to_string(*r.verified) << ")";
        out << "\n";
    }
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const auto [f, a] = load_matrix(o);
    if (!a.is_square()) raise(ErrorKind::NotSquare, "verify needs a square matrix");
    const MdsCheck mds = is_mds_matrix(a, o.caps);
    const MinorScan minors = all_square_submatrices_nonsingular(a, o.caps.max_order);
    const ThreeClauseCheck gen = is_nmds_matrix(a, o.caps);
    const ThreeClauseCheck par = is_nmds_matrix_parity(a, o.caps);
    const bool transpose_ok = dual_transpose_check(a, o.caps);
    const bool inv = is_involutory(a);
    const MatrixClass cls = mds.is_mds ? MatrixClass::MDS : gen.holds() ? MatrixClass::NMDS : MatrixClass::Neither;
    if (mds.is_mds != minors.all_nonsingular)
        raise(ErrorKind::SelfCheckFailed, "code-side and minor-side MDS checks disagree");
    if (gen.holds() != par.holds()) raise(ErrorKind::SelfCheckFailed, "generator-side and parity-side NMDS checks disagree");

    if (o.json) {
        Json j;
        j["schema"] = kSchemaVersion;
        j["command"] = "verify";
        j["field"] = f.to_string();
        j["n"] = a.rows();
        j["class"] = std::string(to_string(cls));
        j["mds"] = {{"holds", mds.is_mds}, {"witness", mds.witness.empty() ? Json(nullptr) : indices_to_json(mds.witness)}};
        Json minor_json{{"all_nonsingular", minors.all_nonsingular}};
        minor_json["witness"] = minors.witness ? Json{{"rows", indices_to_json(minors.witness->rows)},
                                                      {"cols", indices_to_json(minors.witness->cols)}}
                                               : Json(nullptr);
        j["minors"] = std::move(minor_json);
        j["nmds_generator"] = three_clause_to_json(gen);
        j["nmds_parity"] = three_clause_to_json(par);
        j["involutory"] = inv;
        j["transpose_agrees"] = transpose_ok;
        emit_json(out, j);
    } else {
        out << "field: " << f.to_string() << "\n";
        out << "class: " << to_string(cls) << "\n";
        out << "MDS: " << (mds.is_mds ? "yes" : "no");
        if (minors.witness)
            out << " (singular minor rows " << join_indices(minors.witness->rows) << " cols "
                << join_indices(minors.witness->cols) << ")";
        out << "\n";
        auto clauses = [&](const char* name, const ThreeClauseCheck& c) {
            out << name << ": (i) " << (c.clause_i ? "holds" : "fails " + join_indices(c.witness_i)) << ", (ii) "
                << (c.clause_ii ? "holds " + join_indices(c.witness_ii) : "fails") << ", (iii) "
                << (c.clause_iii ? "holds" : "fails " + join_indices(c.witness_iii)) << "\n";
        };
        clauses("NMDS generator side", gen);
        clauses("NMDS parity side", par);
        out << "involutory: " << (inv ? "yes" : "no") << "\n";
        out << "transpose agrees: " << (transpose_ok ? "yes" : "no") << "\n";
    }
    if (!o.expect.empty()) {
        const Target want = parse_target(o.expect);
        const bool ok = want == Target::MDS ? cls == MatrixClass::MDS : cls == MatrixClass::NMDS;
        if (!ok) return kExitCondition;
    }
    return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
    const auto [f, a] = load_matrix(o);
    const CodeReport rep = classify(standard_generator(a), o.caps, o.profile);
    if (o.json)
        emit_json(out, code_report_to_json(f, rep));
    else
        print_report_text(out, rep);
    return kExitOk;
}

int cmd_ghw(const Options& o, std::ostream& out) {
    const auto [f, g] = load_matrix(o);
    const LinearCode code(g);
    std::vector<std::size_t> rs;
    if (o.r)
        rs.push_back(o.r);
    else
        for (std::size_t r = 1; r <= code.dimension(); ++r) rs.push_back(r);
    std::vector<Ghw> values;
    for (auto r : rs) values.push_back(ghw(code, r, o.caps));
    if (o.json) {
        Json j;
        j["schema"] = kSchemaVersion;
        j["command"] = "ghw";
        j["field"] = f.to_string();
        j["n"] = code.length();
        j["k"] = code.dimension();
        Json list = Json::array();
        for (std::size_t i = 0; i < rs.size(); ++i)
            list.push_back({{"r", rs[i]}, {"d", values[i].weight}, {"columns", indices_to_json(values[i].columns)}});
        j["weights"] = std::move(list);
        emit_json(out, j);
    } else {
        out << "code: [" << code.length() << ", " << code.dimension() << "]\n";
        for (std::size_t i = 0; i < rs.size(); ++i)
            out << "d" << rs[i] << " = " << values[i].weight << " columns " << join_indices(values[i].columns) << "\n";
    }
    return kExitOk;
}

int cmd_search(const Options& o, std::ostream& out) {
    const Field f = require_field(o);
    const Notation nt = notation_of(o);
    const Family family = parse_family(o.family);
    const auto [m, hi] = parse_range(o.m_range);
    if (m != hi) raise(ErrorKind::ParseError, "search takes a single m");
    const auto hits = search_theta(family, f, o.n, m);
    if (o.json) {
        Json j;
        j["schema"] = kSchemaVersion;
        j["command"] = "search";
        j["family"] = std::string(to_string(family));
        j["field"] = f.to_string();
        j["n"] = o.n;
        j["m"] = m;
        Json list = Json::array();
        for (const auto& h : hits)
            list.push_back({{"theta", f.format_rep(h.theta, nt)},
                            {"log", h.log},
                            {"verdict", std::string(to_string(h.verdict))},
                            {"witness", h.witness ? indices_to_json(*h.witness) : Json(nullptr)}});
        j["candidates"] = std::move(list);
        emit_json(out, j);
    } else {
        out << hits.size() << " candidates\n";
        for (const auto& h : hits) {
            out << f.format_rep(h.theta, nt) << " " << to_string(h.verdict);
            if (h.witness) out << " witness E" << join_indices(*h.witness);
            out << "\n";
        }
    }
    return kExitOk;
}

int cmd_scan(const Options& o, std::ostream& out) {
    const Field f = require_field(o);
    if (o.poly.empty() == o.roots.empty()) raise(ErrorKind::ParseError, "give exactly one of --poly and --roots");
    const MonicPoly g = o.poly.empty() ? poly_from_roots(f, parse_rep_list(f, o.roots))
                                       : MonicPoly(f, parse_rep_list(f, o.poly));
    const auto [lo, hi] = parse_range(o.m_range);
    const auto table = scan_exponents(g, lo, hi, o.caps, o.max_exponent);
    if (o.json) {
        Json j;
        j["schema"] = kSchemaVersion;
        j["command"] = "scan";
        j["field"] = f.to_string();
        j["poly"] = g.to_string();
        Json t = Json::object();
        for (const auto& e : table) t[std::to_string(e.m)] = std::string(to_string(e.verdict));
        j["table"] = std::move(t);
        emit_json(out, j);
    } else {
        out << "g(x) = " << g.to_string() << "\n";
        for (const auto& e : table) out << "m = " << e.m << ": " << to_string(e.verdict) << "\n";
    }
    return kExitOk;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ParseError: return kExitUsage;
        case ErrorKind::ConditionViolated: return kExitCondition;
        case ErrorKind::SelfCheckFailed: return kExitSelfCheck;
        case ErrorKind::TooLarge:
        case ErrorKind::OrderTooLarge: return kExitTooLarge;
        default: return kExitOther;
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"MDS and near-MDS matrix constructions over finite fields", "nmds"};
    app.require_subcommand(1);
    app.add_flag("--json", o.json, "Machine-readable output");
    app.add_option("--notation", o.notation, "Element notation: power or hex")->capture_default_str();
    app.add_option("--seed", o.seed, "Seed for verification spot checks")->capture_default_str();
    auto* max_order = app.add_option("--max-order", o.caps.max_order, "Largest matrix order classified");
    auto* max_length = app.add_option("--max-length", o.caps.max_length, "Longest code searched by column subsets");
    auto* max_codewords = app.add_option("--max-codewords", o.caps.max_codewords, "Codeword enumeration cap");
    auto* max_exponent = app.add_option("--max-exponent", o.max_exponent, "Largest companion exponent scanned");

    auto field_opt = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--field", o.field, "Field, e.g. GF(2^4;0x13)");
        if (required) opt->required();
    };

    auto* construct_cmd = app.add_subcommand("construct", "Nonrecursive constructions");
    construct_cmd->require_subcommand(1);
    auto* gvand_cmd = construct_cmd->add_subcommand("gvand", "V1^-1 V2 from generalized Vandermonde matrices");
    field_opt(gvand_cmd, true);
    gvand_cmd->add_option("--x", o.x, "x_1..x_n")->required();
    gvand_cmd->add_option("--y", o.y, "y_1..y_n")->required();
    gvand_cmd->add_option("--disc", o.disc, "n-1, 1 or 1,n")->capture_default_str();
    gvand_cmd->add_option("--target", o.target, "mds or nmds")->capture_default_str();
    gvand_cmd->add_flag("--no-verify", o.no_verify, "Skip the post-construction check");
    auto* inv_cmd = construct_cmd->add_subcommand("involutory", "Involutory variant with y_i = l + x_i");
    field_opt(inv_cmd, true);
    inv_cmd->add_option("--x", o.x, "x_1..x_n")->required();
    inv_cmd->add_option("--l", o.l, "Shift l")->required();
    inv_cmd->add_option("--target", o.target, "mds or nmds")->capture_default_str();
    inv_cmd->add_flag("--no-verify", o.no_verify, "Skip the class check");

    auto* recursive_cmd = app.add_subcommand("recursive", "Theta-power root families");
    recursive_cmd->require_subcommand(1);
    std::vector<std::pair<CLI::App*, Family>> family_cmds;
    for (Family fam : {Family::Ib, Family::Ic, Family::NewMds}) {
        auto* sub = recursive_cmd->add_subcommand(std::string(to_string(fam)));
        field_opt(sub, true);
        sub->add_option("--theta", o.theta, "theta")->required();
        sub->add_option("--n", o.n, "Order")->required();
        sub->add_option("--m", o.m_range, "Exponent or range lo..hi")->required();
        sub->add_flag("--verify", o.verify, "Check every C_g^m against the code oracle");
        family_cmds.emplace_back(sub, fam);
    }

    auto* verify_cmd = app.add_subcommand("verify", "All checks on a square matrix");
    field_opt(verify_cmd, false);
    verify_cmd->add_option("--matrix", o.matrix_file, "Matrix file (text or JSON)")->required();
    verify_cmd->add_option("--expect", o.expect, "Exit 2 unless the matrix is of this class");

    auto* classify_cmd = app.add_subcommand("classify", "Code report for [I | A]");
    field_opt(classify_cmd, false);
    classify_cmd->add_option("--matrix", o.matrix_file, "Matrix file (text or JSON)")->required();
    classify_cmd->add_flag("--profile", o.profile, "Include d_1..d_k");

    auto* ghw_cmd = app.add_subcommand("ghw", "Generalized Hamming weights of a code");
    field_opt(ghw_cmd, false);
    ghw_cmd->add_option("--generator", o.matrix_file, "Generator matrix file")->required();
    ghw_cmd->add_option("--r", o.r, "Single r (default: all)");

    auto* search_cmd = app.add_subcommand("search", "Theta candidates for a family");
    field_opt(search_cmd, true);
    search_cmd->add_option("--family", o.family, "theta-ib, theta-ic or new-mds")->required();
    search_cmd->add_option("--n", o.n, "Order")->required();
    search_cmd->add_option("--m", o.m_range, "Exponent")->required();

    auto* scan_cmd = app.add_subcommand("scan", "Class of C_g^m over a range of m");
    field_opt(scan_cmd, true);
    scan_cmd->add_option("--poly", o.poly, "a_1..a_n of g = a_1 + ... + x^n");
    scan_cmd->add_option("--roots", o.roots, "Roots of g");
    scan_cmd->add_option("--m", o.m_range, "Exponent range lo..hi")->required();

    for (auto* sub : {construct_cmd, recursive_cmd, verify_cmd, classify_cmd, ghw_cmd, search_cmd, scan_cmd})
        sub->fallthrough();
    for (auto* sub : {gvand_cmd, inv_cmd}) sub->fallthrough();
    for (auto& [sub, fam] : family_cmds) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    for (auto [opt, name] : {std::pair{max_order, "max-order"}, {max_length, "max-length"},
                             {max_codewords, "max-codewords"}, {max_exponent, "max-exponent"}})
        if (opt->count()) err << "cap override: " << name << " = " << opt->as<std::string>() << "\n";

    try {
        if (gvand_cmd->parsed()) return cmd_construct_gvand(o, out);
        if (inv_cmd->parsed()) return cmd_construct_involutory(o, out);
        for (auto& [sub, fam] : family_cmds)
            if (sub->parsed()) return cmd_recursive(o, fam, out, err);
        if (verify_cmd->parsed()) return cmd_verify(o, out);
        if (classify_cmd->parsed()) return cmd_classify(o, out);
        if (ghw_cmd->parsed()) return cmd_ghw(o, out);
        if (search_cmd->parsed()) return cmd_search(o, out);
        if (scan_cmd->parsed()) return cmd_scan(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what();
        if (!e.witness().empty()) err << " [witness " << join_indices(e.witness()) << "]";
        err << "\n";
        return exit_code_for(e.kind());
    }
    return kExitUsage;
}

}  // namespace nmds
