#include "partalg/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "partalg/json_io.hpp"

namespace partalg {
namespace {

// Hard size caps, raisable (never lowerable) through PARTALG_MAX_K. The
// defaults keep every command comfortably inside Bell-number growth.
struct Caps {
    int symbolic = 3;     // strand bound with symbolic delta
    int specialized = 4;  // strand bound with specialized delta
    int blocks = 10;      // strand bound for block-label enumeration
    int paths = 5;        // half-level bound for path enumeration
};

Caps current_caps() {
    Caps caps;
    if (const char* raw = std::getenv("PARTALG_MAX_K")) {
        try {
            const int raised = std::stoi(raw);
            caps.symbolic = std::max(caps.symbolic, raised);
            caps.specialized = std::max(caps.specialized, raised);
            caps.blocks = std::max(caps.blocks, raised);
            caps.paths = std::max(caps.paths, raised);
        } catch (const std::exception&) {
            // Unparseable values leave the defaults in place.
        }
    }
    return caps;
}

void require_cap(const char* flag, int value, int cap) {
    if (value > cap)
        throw std::invalid_argument(std::string(flag) + "=" + std::to_string(value) +
                                    " exceeds the hard cap " + std::to_string(cap) +
                                    " (raise with PARTALG_MAX_K)");
}

Ring make_ring(int k, bool has_delta, const std::string& delta_text) {
    Ring ring;
    ring.k = k;
    if (has_delta) {
        ring.mode = Mode::rational;
        ring.delta = parse_rational(delta_text);
    }
    return ring;
}

std::string vertex_str(const GraphVertex& v) {
    return "(" + v.shape.str() + "," + std::to_string(v.l) + ")";
}

std::string path_str(const BranchPath& path) {
    std::string text;
    for (const auto& v : path.vertices) {
        if (!text.empty()) text += " -> ";
        text += vertex_str(v);
    }
    return text;
}

void emit_element(const Element& e, const std::string& format, std::ostream& out) {
    if (format == "text")
        out << e.str() << '\n';
    else
        out << element_to_json(e).dump() << '\n';
}

// ---- operands for mul -------------------------------------------------

struct Operand {
    bool is_element = false;
    Diagram diagram;
    Element element{Ring{}};
};

std::string slurp(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// An operand is "-" (stdin), a file path, inline JSON, or diagram text.
Operand read_operand(const std::string& arg, std::istream& in) {
    std::string text;
    if (arg == "-") {
        text = slurp(in);
    } else if (std::filesystem::exists(arg)) {
        std::ifstream file(arg);
        if (!file) throw std::invalid_argument("cannot open \"" + arg + "\"");
        text = slurp(file);
    } else {
        text = arg;
    }
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        throw std::invalid_argument("empty operand \"" + arg + "\"");

    Operand op;
    if (text[first] == '{') {
        Json parsed;
        try {
            parsed = Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw std::invalid_argument(std::string("invalid JSON operand: ") + e.what());
        }
        if (parsed.contains("terms")) {
            op.is_element = true;
            op.element = element_from_json(parsed);
        } else {
            op.diagram = diagram_from_json(parsed);
        }
    } else {
        op.diagram = Diagram::parse(text);
    }
    return op;
}

// ---- subcommand bodies -------------------------------------------------

int run_mul(const std::string& lhs, const std::string& rhs, const std::string& format,
            std::ostream& out, std::istream& in) {
    const Operand a = read_operand(lhs, in);
    const Operand b = read_operand(rhs, in);
    if (!a.is_element && !b.is_element) {
        if (a.diagram.k() != b.diagram.k())
            throw std::invalid_argument("operands have different strand counts");
        const ComposeResult result = compose(a.diagram, b.diagram);
        if (format == "text") {
            out << result.product.str() << '\n' << "removed: " << result.removed << '\n';
        } else {
            Json j = diagram_to_json(result.product);
            j["removed"] = result.removed;
            out << j.dump() << '\n';
        }
        return 0;
    }
    const Ring ring = a.is_element ? a.element.ring() : b.element.ring();
    const Element left = a.is_element ? a.element : Element(ring, a.diagram);
    const Element right = b.is_element ? b.element : Element(ring, b.diagram);
    emit_element(left * right, format, out);
    return 0;
}

int run_jm(const std::string& kind, int index, int k, bool has_delta,
           const std::string& delta_text, const Caps& caps, const std::string& format,
           std::ostream& out) {
    require_cap("k", k, has_delta ? caps.specialized : caps.symbolic);
    JMCache cache(make_ring(k, has_delta, delta_text));
    const Element& value = kind == "L" ? cache.L(index) : cache.sigma(index);
    emit_element(value, format, out);
    return 0;
}

int run_verify(int level, int k, bool has_delta, const std::string& delta_text,
               const Caps& caps, const std::string& format, std::ostream& out) {
    if (k == 0) k = (level + 1) / 2;
    require_cap("k", k, has_delta ? caps.specialized : caps.symbolic);
    JMCache cache(make_ring(k, has_delta, delta_text));
    const RelationReport report = verify_relations(level, cache);
    if (format == "text") {
        std::size_t passed = 0;
        for (const auto& check : report.checks) passed += check.pass ? 1 : 0;
        out << "level " << level << ": " << passed << "/" << report.checks.size()
            << " relations hold\n";
        for (const auto& check : report.checks) {
            if (check.pass) continue;
            out << "FAIL " << check.relation;
            for (const auto& [name, value] : check.indices)
                out << ' ' << name << '=' << value;
            out << '\n';
        }
    } else {
        out << relation_report_to_json(report).dump() << '\n';
    }
    return report.all_pass() ? 0 : 1;
}

int run_ssp(const std::string& kind, int n, bool at_jm, bool has_values,
            const std::string& values_text, int r, int k, bool has_delta,
            const std::string& delta_text, const Caps& caps, const std::string& format,
            std::ostream& out) {
    if (at_jm == has_values)
        throw std::invalid_argument("exactly one of --at-jm and --values is required");

    if (has_values) {
        std::vector<Rational> values;
        std::istringstream stream(values_text);
        std::string token;
        while (std::getline(stream, token, ',')) values.push_back(parse_rational(token));
        const Rational result = kind == "l" ? eval_l(n, values, Rational(1))
                                            : eval_q(n, values, Rational(1));
        if (format == "text") {
            out << format_rational(result) << '\n';
        } else {
            Json j;
            j["kind"] = kind;
            j["n"] = n;
            j["value"] = format_rational(result);
            out << j.dump() << '\n';
        }
        return 0;
    }

    if (r < 0) throw std::invalid_argument("--at-jm requires --r");
    if (k == 0) k = (r + 1) / 2;
    require_cap("k", k, has_delta ? caps.specialized : caps.symbolic);
    const Ring ring = make_ring(k, has_delta, delta_text);
    JMCache cache(ring);
    Element value = Element::zero(ring);
    if (kind == "l") {
        value = l_at_jm(n, r, cache);
    } else {
        std::vector<Element> normalized;
        for (int i = 1; i <= r; ++i) normalized.push_back(cache.N(i));
        value = eval_q(n, normalized, Element::identity(ring));
    }
    emit_element(value, format, out);
    return 0;
}

int run_center_check(int r, int n_max, int k, bool has_delta,
                     const std::string& delta_text, const Caps& caps,
                     const std::string& format, std::ostream& out) {
    if (k == 0) k = (r + 1) / 2;
    require_cap("k", k, has_delta ? caps.specialized : caps.symbolic);
    JMCache cache(make_ring(k, has_delta, delta_text));
    const CentralityReport report = check_centrality(r, n_max, cache);
    if (format == "text") {
        if (report.all_pass()) {
            out << "level " << r << ": l_0..l_" << n_max << " all central\n";
        } else {
            for (const auto& check : report.checks)
                if (!check.pass) out << "FAIL n=" << check.n << '\n';
        }
    } else {
        out << centrality_report_to_json(report).dump() << '\n';
    }
    return report.all_pass() ? 0 : 1;
}

int run_center_rank(int k, const std::string& delta_text, const Caps& caps,
                    const std::string& format, std::ostream& out) {
    require_cap("k", k, caps.specialized);
    const Rational delta = parse_rational(delta_text);
    const CenterRankResult result = center_rank(k, delta, -1, -1, caps.specialized);
    if (format == "text") {
        out << "rank " << result.rank << (result.stable ? " (stable)" : " (unstable)")
            << '\n';
    } else {
        Json j;
        j["k"] = k;
        j["delta"] = format_rational(delta);
        j["rank"] = result.rank;
        j["stable"] = result.stable;
        out << j.dump() << '\n';
    }
    return 0;
}

int run_branch(int level, const Caps& caps, const std::string& format,
               std::ostream& out) {
    require_cap("level", level, 2 * caps.paths);
    const auto vertices = vertices_at(level, (level + 1) / 2);
    if (format == "text") {
        for (const auto& v : vertices) out << vertex_str(v) << '\n';
    } else {
        Json j;
        j["level"] = level;
        Json list = Json::array();
        for (const auto& v : vertices) list.push_back(vertex_to_json(v));
        j["vertices"] = std::move(list);
        out << j.dump() << '\n';
    }
    return 0;
}

GraphVertex make_target(const std::string& shape_text, int l, int level) {
    const Shape shape = Shape::parse(shape_text);
    if (l < 0) {
        l = level / 2 - shape.size();
        if (l < 0) throw std::invalid_argument("shape too large for level");
    }
    return GraphVertex{shape, l, level};
}

int run_paths(const std::string& shape_text, int l, int level, bool count_only,
              const Caps& caps, const std::string& format, std::ostream& out) {
    require_cap("level", level, 2 * caps.paths);
    const GraphVertex target = make_target(shape_text, l, level);
    const long long count = count_paths(target, caps.paths);
    std::vector<BranchPath> paths;
    if (!count_only) paths = enumerate_paths(target, caps.paths);

    if (format == "text") {
        out << "count " << count << '\n';
        for (const auto& path : paths) out << path_str(path) << '\n';
    } else {
        Json j;
        j["shape"] = shape_to_json(target.shape);
        j["l"] = target.l;
        j["level"] = level;
        j["count"] = count;
        if (!count_only) {
            Json list = Json::array();
            for (const auto& path : paths) list.push_back(path_to_json(path));
            j["paths"] = std::move(list);
        }
        out << j.dump() << '\n';
    }
    return 0;
}

int run_std_path(const std::string& shape_text, int l, int level, bool with_contents,
                 const Caps& caps, const std::string& format, std::ostream& out) {
    require_cap("level", level, 2 * caps.paths);
    const GraphVertex target = make_target(shape_text, l, level);
    const BranchPath path = standard_path(target);
    std::vector<ContentValue> contents;
    if (with_contents) contents = path_contents(path);

    if (format == "text") {
        out << path_str(path) << '\n';
        if (with_contents) {
            std::string line;
            for (const auto& c : contents) {
                if (!line.empty()) line += ", ";
                line += format_content(c);
            }
            out << "contents: " << line << '\n';
        }
    } else {
        Json j;
        j["shape"] = shape_to_json(target.shape);
        j["l"] = target.l;
        j["level"] = level;
        j["path"] = path_to_json(path);
        if (with_contents) {
            Json list = Json::array();
            for (const auto& c : contents) list.push_back(content_to_json(c));
            j["contents"] = std::move(list);
        }
        out << j.dump() << '\n';
    }
    return 0;
}

int run_blocks(int k, const std::string& delta_text, const std::string& method,
               const Caps& caps, const std::string& format, std::ostream& out) {
    require_cap("k", k, caps.blocks);
    const Rational delta = parse_rational(delta_text);

    BlockPartition partition;
    bool crosscheck = false;
    if (method == "genfun")
        partition = genfun_classes(k, delta, caps.blocks);
    else
        partition = chain_classes(k, delta, caps.blocks);
    if (method == "both") crosscheck = block_crosscheck(k, delta, caps.blocks);

    if (format == "text") {
        for (const auto& cls : partition.classes) {
            std::string line;
            for (const auto& member : cls) {
                if (!line.empty()) line += " -> ";
                line += vertex_str(member);
            }
            out << line << '\n';
        }
        if (method == "both") out << "crosscheck: " << (crosscheck ? "true" : "false") << '\n';
    } else {
        Json j;
        j["delta"] = format_rational(delta);
        j["k"] = k;
        if (method != "both") j["method"] = method;
        j["classes"] = block_classes_to_json(partition.classes);
        if (method == "both") j["crosscheck"] = crosscheck;
        out << j.dump() << '\n';
    }
    return method == "both" && !crosscheck ? 1 : 0;
}

}  // namespace

int cli_run(std::vector<std::string> args, std::ostream& out, std::ostream& err,
            std::istream& in) {
    const Caps caps = current_caps();
    const std::string sym_cap_note =
        " (hard cap " + std::to_string(caps.symbolic) + " symbolic, " +
        std::to_string(caps.specialized) + " with --delta; raise with PARTALG_MAX_K)";

    CLI::App app{"Exact partition-algebra computations: diagram products, Jucys-Murphy "
                 "elements, central elements, branching paths, and block partitions."};
    app.name("partalg");
    app.require_subcommand(1);

    std::string format = "json";
    const auto add_format = [&format](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"json", "text"}))
            ->capture_default_str();
    };

    int status = 0;

    std::string mul_lhs, mul_rhs;
    auto* mul = app.add_subcommand("mul", "Multiply two diagrams or elements");
    mul->add_option("lhs", mul_lhs, "Diagram text, JSON, a file path, or - for stdin")
        ->required();
    mul->add_option("rhs", mul_rhs, "Diagram text, JSON, a file path, or - for stdin")
        ->required();
    add_format(mul);
    mul->callback([&] { status = run_mul(mul_lhs, mul_rhs, format, out, in); });

    std::string jm_kind, jm_delta;
    int jm_index = 0, jm_k = 0;
    auto* jm = app.add_subcommand("jm", "A Jucys-Murphy element L or interchanger sigma");
    jm->add_option("kind", jm_kind, "L or sigma")
        ->required()
        ->check(CLI::IsMember({"L", "sigma"}));
    jm->add_option("index", jm_index, "Element index")->required();
    jm->add_option("--k", jm_k, "Strand count" + sym_cap_note)
        ->required()
        ->check(CLI::PositiveNumber);
    auto* jm_delta_opt = jm->add_option("--delta", jm_delta, "Specialize delta (rational)");
    add_format(jm);
    jm->callback([&] {
        status = run_jm(jm_kind, jm_index, jm_k, jm_delta_opt->count() > 0, jm_delta,
                        caps, format, out);
    });

    int verify_level = 0, verify_k = 0;
    std::string verify_delta;
    auto* verify = app.add_subcommand("verify", "Check the relation catalogue at a level");
    verify->add_option("--level", verify_level, "Subalgebra level r")
        ->required()
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--k", verify_k, "Ambient strand count (default: ceil(r/2))" + sym_cap_note)
        ->check(CLI::PositiveNumber);
    auto* verify_delta_opt =
        verify->add_option("--delta", verify_delta, "Specialize delta (rational)");
    add_format(verify);
    verify->callback([&] {
        status = run_verify(verify_level, verify_k, verify_delta_opt->count() > 0,
                            verify_delta, caps, format, out);
    });

    std::string ssp_kind, ssp_values, ssp_delta;
    int ssp_n = 0, ssp_r = -1, ssp_k = 0;
    bool ssp_at_jm = false;
    auto* ssp = app.add_subcommand("ssp", "Supersymmetric sums q_n and l_n");
    ssp->add_option("kind", ssp_kind, "l or q")->required()->check(CLI::IsMember({"l", "q"}));
    ssp->add_option("n", ssp_n, "Degree")->required()->check(CLI::NonNegativeNumber);
    auto* ssp_at_jm_flag =
        ssp->add_flag("--at-jm", ssp_at_jm, "Evaluate at the normalized elements N_1..N_r");
    auto* ssp_values_opt =
        ssp->add_option("--values", ssp_values, "Comma-separated rationals to evaluate at");
    ssp_at_jm_flag->excludes(ssp_values_opt);
    ssp->add_option("--r", ssp_r, "Level for --at-jm")->check(CLI::NonNegativeNumber);
    ssp->add_option("--k", ssp_k, "Ambient strand count (default: ceil(r/2))" + sym_cap_note)
        ->check(CLI::PositiveNumber);
    auto* ssp_delta_opt = ssp->add_option("--delta", ssp_delta, "Specialize delta (rational)");
    add_format(ssp);
    ssp->callback([&] {
        status = run_ssp(ssp_kind, ssp_n, ssp_at_jm, ssp_values_opt->count() > 0,
                         ssp_values, ssp_r, ssp_k, ssp_delta_opt->count() > 0, ssp_delta,
                         caps, format, out);
    });

    int cc_r = 0, cc_nmax = 4, cc_k = 0;
    std::string cc_delta;
    auto* cc = app.add_subcommand("center-check", "Verify centrality of l_n at N_1..N_r");
    cc->add_option("--r", cc_r, "Subalgebra level")->required()->check(CLI::NonNegativeNumber);
    cc->add_option("--nmax", cc_nmax, "Largest degree checked")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    cc->add_option("--k", cc_k, "Ambient strand count (default: ceil(r/2))" + sym_cap_note)
        ->check(CLI::PositiveNumber);
    auto* cc_delta_opt = cc->add_option("--delta", cc_delta, "Specialize delta (rational)");
    add_format(cc);
    cc->callback([&] {
        status = run_center_check(cc_r, cc_nmax, cc_k, cc_delta_opt->count() > 0, cc_delta,
                                  caps, format, out);
    });

    int cr_k = 0;
    std::string cr_delta;
    auto* cr = app.add_subcommand("center-rank",
                                  "Rank of the span of products of the central elements");
    cr->add_option("--k", cr_k, "Strand count (hard cap " + std::to_string(caps.specialized) +
                                    "; raise with PARTALG_MAX_K)")
        ->required()
        ->check(CLI::PositiveNumber);
    cr->add_option("--delta", cr_delta, "Rational value of delta")->required();
    add_format(cr);
    cr->callback([&] { status = run_center_rank(cr_k, cr_delta, caps, format, out); });

    int branch_level = 0;
    auto* branch = app.add_subcommand("branch", "Branching-graph vertices at a level");
    branch->add_option("--level", branch_level,
                       "Level (hard cap " + std::to_string(2 * caps.paths) +
                           "; raise with PARTALG_MAX_K)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    add_format(branch);
    branch->callback([&] { status = run_branch(branch_level, caps, format, out); });

    std::string paths_shape;
    int paths_l = -1, paths_level = 0;
    bool paths_count_only = false;
    auto* paths = app.add_subcommand("paths", "Branching-graph paths to a vertex");
    paths->add_option("--shape", paths_shape, "Comma-separated parts; empty for the empty shape");
    paths->add_option("--l", paths_l, "Label component l (default: derived from the level)")
        ->check(CLI::NonNegativeNumber);
    paths->add_option("--level", paths_level,
                      "Level (hard cap " + std::to_string(2 * caps.paths) +
                          "; raise with PARTALG_MAX_K)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    paths->add_flag("--count-only", paths_count_only, "Report the count without the paths");
    add_format(paths);
    paths->callback([&] {
        status = run_paths(paths_shape, paths_l, paths_level, paths_count_only, caps,
                           format, out);
    });

    std::string sp_shape;
    int sp_l = -1, sp_level = 0;
    bool sp_contents = false;
    auto* sp = app.add_subcommand("std-path", "The standard path to a vertex");
    sp->add_option("--shape", sp_shape, "Comma-separated parts; empty for the empty shape");
    sp->add_option("--l", sp_l, "Label component l (default: derived from the level)")
        ->check(CLI::NonNegativeNumber);
    sp->add_option("--level", sp_level,
                   "Level (hard cap " + std::to_string(2 * caps.paths) +
                       "; raise with PARTALG_MAX_K)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    sp->add_flag("--contents", sp_contents, "Include the content sequence");
    add_format(sp);
    sp->callback([&] {
        status = run_std_path(sp_shape, sp_l, sp_level, sp_contents, caps, format, out);
    });

    int blocks_k = 0;
    std::string blocks_delta, blocks_method = "both";
    auto* blocks = app.add_subcommand("blocks", "Block partition of the label set");
    blocks->add_option("--k", blocks_k, "Strand count (hard cap " +
                                            std::to_string(caps.blocks) +
                                            "; raise with PARTALG_MAX_K)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    blocks->add_option("--delta", blocks_delta, "Rational value of delta")->required();
    blocks->add_option("--method", blocks_method, "chains, genfun, or both")
        ->check(CLI::IsMember({"chains", "genfun", "both"}))
        ->capture_default_str();
    add_format(blocks);
    blocks->callback([&] {
        status = run_blocks(blocks_k, blocks_delta, blocks_method, caps, format, out);
    });

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        if (code == 0) return 0;
        // CLI11 reports missing requirements before stray tokens; name the
        // strays too so the diagnostic always shows the offending input.
        for (const auto& extra : app.remaining(true))
            err << "unexpected argument: " << extra << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return status;
}

int cli_run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    return cli_run(std::move(args), out, err, std::cin);
}

}  // namespace partalg
