// singq: command line front end for the singq shared library.
//
// Exit codes: 0 success / positive verdict, 1 negative verdict (an axiom
// fails, not isomorphic), 2 usage or input error.
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "singq.h"

namespace {

struct UsageError {
    std::string message;
};

// Any failing library call funnels through here; exits with code 2 upstream.
void require_ok(singq_status st) {
    if (st != SINGQ_OK) throw UsageError{singq_last_error()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError{"cannot open '" + path + "'"};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

template <typename T, void (*Free)(T*)>
struct HandleDeleter {
    void operator()(T* t) const { Free(t); }
};
template <typename T, void (*Free)(T*)>
using Handle = std::unique_ptr<T, HandleDeleter<T, Free>>;

using GroupHandle = Handle<singq_group, singq_group_free>;
using StructureHandle = Handle<singq_structure, singq_structure_free>;
using ReportHandle = Handle<singq_report, singq_report_free>;
using DiagramHandle = Handle<singq_diagram, singq_diagram_free>;
using ColoringsHandle = Handle<singq_colorings, singq_colorings_free>;
using ListHandle = Handle<singq_structure_list, singq_structure_list_free>;

std::string owned_string(char* s) {
    std::string out = s ? s : "";
    singq_string_free(s);
    return out;
}

StructureHandle parse_structure_file(const std::string& path) {
    const std::string text = slurp(path);
    singq_structure* s = nullptr;
    require_ok(singq_structure_parse(text.c_str(), &s));
    return StructureHandle(s);
}

long long parse_ll(const std::string& tok, const char* what) {
    try {
        size_t used = 0;
        const long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw UsageError{std::string("expected an integer for ") + what +
                         ", got '" + tok + "'"};
    }
}

int parse_int(const std::string& tok, const char* what) {
    const long long v = parse_ll(tok, what);
    if (v < INT32_MIN || v > INT32_MAX)
        throw UsageError{std::string(what) + " out of range"};
    return static_cast<int>(v);
}

std::vector<int> parse_int_list(const std::string& tok, const char* what) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(tok);
    while (std::getline(in, item, ','))
        out.push_back(parse_int(item, what));
    return out;
}

// ---- check ------------------------------------------------------------

int run_check(const std::string& path) {
    StructureHandle s = parse_structure_file(path);
    singq_report* rep_raw = nullptr;
    require_ok(singq_structure_check(s.get(), &rep_raw));
    ReportHandle rep(rep_raw);

    bool quandle_ok = true;
    const int entries = singq_report_size(rep.get());
    for (int i = 0; i < entries; ++i) {
        const char* name = nullptr;
        int status = 0, witness[3] = {0, 0, 0}, wlen = 0;
        require_ok(singq_report_entry(rep.get(), i, &name, &status, witness, &wlen));
        std::cout << name << ": ";
        if (status == SINGQ_AXIOM_PASS) {
            std::cout << "PASS\n";
        } else if (status == SINGQ_AXIOM_SKIPPED) {
            std::cout << "SKIPPED\n";
        } else {
            std::cout << "FAIL witness (";
            for (int k = 0; k < wlen; ++k)
                std::cout << (k ? ", " : "") << witness[k];
            std::cout << ")\n";
            if (i < 3) quandle_ok = false;
        }
    }
    if (singq_report_all_passed(rep.get())) {
        std::cout << "result: "
                  << (singq_structure_is_singquandle(s.get())
                          ? "oriented singquandle"
                          : "quandle")
                  << "\n";
        return 0;
    }
    std::cout << "result: "
              << (quandle_ok ? "not an oriented singquandle" : "not a quandle")
              << "\n";
    return 1;
}

// ---- build ------------------------------------------------------------

struct BuildArgs {
    std::string family;
    std::vector<std::string> params;
    std::string output;
    std::string group_file;
};

GroupHandle resolve_group(const BuildArgs& args, size_t* param_cursor) {
    singq_group* g = nullptr;
    if (!args.group_file.empty()) {
        const std::string text = slurp(args.group_file);
        require_ok(singq_group_parse(text.c_str(), &g));
    } else {
        if (*param_cursor >= args.params.size())
            throw UsageError{"missing group name (or use --group <file>)"};
        require_ok(singq_group_named(args.params[(*param_cursor)++].c_str(), &g));
    }
    return GroupHandle(g);
}

int run_build(const BuildArgs& args) {
    auto want = [&](size_t n, const char* usage) {
        if (args.params.size() != n)
            throw UsageError{std::string("usage: singq build ") + usage};
    };
    StructureHandle s;
    std::string note;
    singq_structure* raw = nullptr;
    size_t cursor = 0;
    const bool grouped = !args.group_file.empty();

    if (args.family == "trivial") {
        want(1, "trivial <n>");
        require_ok(singq_build_trivial(parse_int(args.params[0], "n"), &raw));
    } else if (args.family == "dihedral") {
        want(1, "dihedral <n>");
        require_ok(singq_build_dihedral(parse_int(args.params[0], "n"), &raw));
    } else if (args.family == "affine") {
        want(2, "affine <n> <a>");
        require_ok(singq_build_affine(parse_int(args.params[0], "n"),
                                      parse_ll(args.params[1], "a"), &raw));
    } else if (args.family == "affine-sq") {
        want(3, "affine-sq <n> <a> <b>");
        require_ok(singq_build_affine_singquandle(
            parse_int(args.params[0], "n"), parse_ll(args.params[1], "a"),
            parse_ll(args.params[2], "b"), &raw));
    } else if (args.family == "alexander-sq") {
        want(6, "alexander-sq <n> <t> <v> <a> <b> <c>");
        char* note_raw = nullptr;
        require_ok(singq_build_alexander_singquandle(
            parse_int(args.params[0], "n"), parse_ll(args.params[1], "t"),
            parse_ll(args.params[2], "v"), parse_ll(args.params[3], "a"),
            parse_ll(args.params[4], "b"), parse_ll(args.params[5], "c"),
            &note_raw, &raw));
        note = owned_string(note_raw);
    } else if (args.family == "conj-sol") {
        GroupHandle g = resolve_group(args, &cursor);
        const size_t rest = args.params.size() - cursor;
        if (rest != 1 && rest != 2)
            throw UsageError{grouped
                                 ? "usage: singq build conj-sol --group <file> <k> [n]"
                                 : "usage: singq build conj-sol <group> <k> [n]"};
        const int k = parse_int(args.params[cursor], "k");
        const int n = rest == 2 ? parse_int(args.params[cursor + 1], "n") : 1;
        require_ok(singq_build_conj_solution(g.get(), k, n, &raw));
    } else if (args.family == "prop-family") {
        GroupHandle g = resolve_group(args, &cursor);
        if (args.params.size() - cursor != 2)
            throw UsageError{
                grouped ? "usage: singq build prop-family --group <file> <family> <n>"
                        : "usage: singq build prop-family <group> <family> <n>"};
        require_ok(singq_build_prop_family(
            g.get(), parse_int(args.params[cursor], "family"),
            parse_int(args.params[cursor + 1], "n"), &raw));
    } else if (args.family == "abelian-fg") {
        GroupHandle g = resolve_group(args, &cursor);
        if (args.params.size() - cursor != 2)
            throw UsageError{
                grouped
                    ? "usage: singq build abelian-fg --group <file> <f0,f1,...> <h0,h1,...>"
                    : "usage: singq build abelian-fg <group> <f0,f1,...> <h0,h1,...>"};
        const auto f = parse_int_list(args.params[cursor], "f");
        const auto h = parse_int_list(args.params[cursor + 1], "h");
        const size_t order = static_cast<size_t>(singq_group_order(g.get()));
        if (f.size() != order || h.size() != order)
            throw UsageError{"f and h need exactly " + std::to_string(order) +
                             " comma-separated images"};
        require_ok(singq_build_abelian_fg(g.get(), f.data(), h.data(), &raw));
    } else {
        throw UsageError{
            "unknown family '" + args.family +
            "' (expected trivial, dihedral, affine, affine-sq, alexander-sq, "
            "conj-sol, prop-family or abelian-fg)"};
    }
    s.reset(raw);

    char* text_raw = nullptr;
    require_ok(singq_structure_format(s.get(), &text_raw));
    const std::string text = owned_string(text_raw);

    singq_report* rep_raw = nullptr;
    require_ok(singq_structure_check(s.get(), &rep_raw));
    ReportHandle rep(rep_raw);

    std::ostringstream summary;
    summary << "carrier: " << singq_structure_size(s.get()) << "\n"
            << "check: " << (singq_report_all_passed(rep.get()) ? "PASS" : "FAIL")
            << "\n";
    if (!note.empty()) std::cerr << "note: " << note << "\n";

    if (args.output.empty()) {
        std::cout << text;
        std::cerr << summary.str();
    } else {
        std::ofstream out(args.output, std::ios::binary);
        if (!out) throw UsageError{"cannot open '" + args.output + "' for writing"};
        out << text;
        if (!out.flush()) throw UsageError{"failed writing '" + args.output + "'"};
        std::cout << summary.str();
    }
    return 0;
}

// ---- color ------------------------------------------------------------

DiagramHandle resolve_diagram(const std::string& source) {
    singq_diagram* d = nullptr;
    if (source.rfind("fixture:", 0) == 0) {
        require_ok(singq_fixture_get(source.substr(8).c_str(), &d));
    } else {
        const std::string text = slurp(source);
        require_ok(singq_diagram_parse(text.c_str(), &d));
    }
    return DiagramHandle(d);
}

int carrier_guard_from_env() {
    const char* env = std::getenv("SINGQ_MAX_CARRIER");
    if (!env || !*env) return 0;
    try {
        return std::stoi(env);
    } catch (const std::exception&) {
        throw UsageError{"SINGQ_MAX_CARRIER must be an integer"};
    }
}

int run_color(const std::string& structure_path, const std::string& diagram_spec,
              bool list, std::uint64_t limit, int max_semiarcs, int max_carrier) {
    StructureHandle s = parse_structure_file(structure_path);
    DiagramHandle d = resolve_diagram(diagram_spec);
    if (max_carrier <= 0) max_carrier = carrier_guard_from_env();

    singq_report* rep_raw = nullptr;
    require_ok(singq_structure_check(s.get(), &rep_raw));
    ReportHandle rep(rep_raw);
    if (!singq_report_all_passed(rep.get())) {
        for (int i = 0; i < singq_report_size(rep.get()); ++i) {
            const char* name = nullptr;
            int status = 0, w[3], wlen = 0;
            require_ok(singq_report_entry(rep.get(), i, &name, &status, w, &wlen));
            if (status == SINGQ_AXIOM_FAIL) {
                std::cerr << "warning: structure fails " << name
                          << "; the count is not a move invariant\n";
                break;
            }
        }
    }

    if (!list && limit == 0) {
        std::uint64_t n = 0;
        require_ok(singq_colorings_count(d.get(), s.get(), max_semiarcs,
                                         max_carrier, &n));
        std::cout << "colorings: " << n << "\n";
        return 0;
    }
    singq_colorings* cols_raw = nullptr;
    require_ok(singq_colorings_compute(d.get(), s.get(), limit, max_semiarcs,
                                       max_carrier, &cols_raw));
    ColoringsHandle cols(cols_raw);
    const std::uint64_t n = singq_colorings_size(cols.get());
    std::cout << "colorings: " << n << "\n";
    if (list) {
        const int semiarcs = singq_colorings_semiarc_count(cols.get());
        std::vector<int> buf(static_cast<size_t>(semiarcs));
        for (std::uint64_t i = 0; i < n; ++i) {
            require_ok(singq_colorings_get(cols.get(), i, buf.data()));
            for (int k = 0; k < semiarcs; ++k)
                std::cout << (k ? " " : "") << buf[static_cast<size_t>(k)];
            std::cout << "\n";
        }
    }
    return 0;
}

// ---- enum -------------------------------------------------------------

int run_enum(const std::string& quandle_path, std::uint64_t limit,
             int max_carrier) {
    StructureHandle q = parse_structure_file(quandle_path);
    std::uint64_t total = 0;
    require_ok(singq_count(q.get(), max_carrier, &total));
    std::cout << "total: " << total << "\n";
    if (limit == 0) return 0;

    singq_structure_list* list_raw = nullptr;
    require_ok(singq_enumerate(q.get(), limit, max_carrier, &list_raw));
    ListHandle list(list_raw);
    const int shown = singq_structure_list_size(list.get());
    std::cout << "shown: " << shown << "\n";
    for (int i = 0; i < shown; ++i) {
        singq_structure* item_raw = nullptr;
        require_ok(singq_structure_list_get(list.get(), i, &item_raw));
        StructureHandle item(item_raw);
        char* text_raw = nullptr;
        require_ok(singq_structure_format(item.get(), &text_raw));
        std::cout << "\n" << owned_string(text_raw);
    }
    return 0;
}

// ---- iso --------------------------------------------------------------

int run_iso(const std::string& path_a, const std::string& path_b, int max_size) {
    StructureHandle a = parse_structure_file(path_a);
    StructureHandle b = parse_structure_file(path_b);
    int found = 0;
    std::vector<int> images(static_cast<size_t>(singq_structure_size(a.get())));
    require_ok(singq_find_isomorphism(a.get(), b.get(), max_size, &found,
                                      images.data()));
    if (!found) {
        std::cout << "isomorphic: no\n";
        return 1;
    }
    std::cout << "isomorphic: yes\nmap:";
    for (size_t i = 0; i < images.size(); ++i)
        std::cout << " " << i << "->" << images[i];
    std::cout << "\n";
    return 0;
}

// ---- fixtures ---------------------------------------------------------

int run_fixtures(const std::string& name) {
    if (name.empty()) {
        for (int i = 0; i < singq_fixture_count(); ++i)
            std::cout << singq_fixture_name(i) << " - "
                      << singq_fixture_description(i) << "\n";
        return 0;
    }
    singq_diagram* d_raw = nullptr;
    require_ok(singq_fixture_get(name.c_str(), &d_raw));
    DiagramHandle d(d_raw);
    char* text_raw = nullptr;
    require_ok(singq_diagram_serialize(d.get(), &text_raw));
    std::cout << owned_string(text_raw);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite oriented singquandles: checking, construction, "
                 "enumeration, diagram coloring and isomorphism testing"};
    app.require_subcommand(1);

    std::string check_file;
    CLI::App* check = app.add_subcommand("check", "verify the axioms of a structure file");
    check->add_option("--structure", check_file, "quandle or singquandle file")
        ->required();

    BuildArgs build_args;
    CLI::App* build = app.add_subcommand("build", "construct a named structure family");
    build->add_option("family", build_args.family, "family name")->required();
    build->add_option("params", build_args.params, "family parameters");
    build->add_option("-o,--output", build_args.output, "write the structure here");
    build->add_option("--group", build_args.group_file,
                      "group file replacing the <group> parameter");

    std::string color_structure, color_diagram;
    bool color_list = false;
    std::uint64_t color_limit = 0;
    int color_max_semiarcs = 0, color_max_carrier = 0;
    CLI::App* color = app.add_subcommand("color", "enumerate colorings of a diagram");
    color->add_option("--structure", color_structure, "structure file")->required();
    color->add_option("--diagram", color_diagram,
                      "diagram file, or fixture:<name>")->required();
    color->add_flag("--list", color_list, "print every coloring");
    color->add_option("--limit", color_limit, "stop after this many colorings");
    color->add_option("--max-semiarcs", color_max_semiarcs,
                      "raise the semiarc guard (default 64)");
    color->add_option("--max-carrier", color_max_carrier,
                      "raise the carrier guard (default 64, or SINGQ_MAX_CARRIER)");

    std::string enum_file;
    std::uint64_t enum_limit = 0;
    int enum_max_carrier = 4;
    CLI::App* enum_cmd = app.add_subcommand(
        "enum", "enumerate oriented singquandles over a quandle");
    enum_cmd->add_option("--quandle", enum_file, "quandle file")->required();
    enum_cmd->add_option("--limit", enum_limit, "also print the first K structures");
    enum_cmd->add_option("--max-carrier", enum_max_carrier,
                         "raise the enumeration guard (default 4)");

    std::string iso_a, iso_b;
    int iso_max_size = 12;
    CLI::App* iso = app.add_subcommand("iso", "search for an isomorphism");
    iso->add_option("fileA", iso_a, "first structure file")->required();
    iso->add_option("fileB", iso_b, "second structure file")->required();
    iso->add_option("--max-size", iso_max_size, "carrier guard (default 12)");

    std::string fixtures_name;
    CLI::App* fixtures = app.add_subcommand("fixtures", "list or print built-in diagrams");
    fixtures->add_option("name", fixtures_name, "fixture to print");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) return run_check(check_file);
        if (build->parsed()) return run_build(build_args);
        if (color->parsed())
            return run_color(color_structure, color_diagram, color_list,
                             color_limit, color_max_semiarcs, color_max_carrier);
        if (enum_cmd->parsed()) return run_enum(enum_file, enum_limit, enum_max_carrier);
        if (iso->parsed()) return run_iso(iso_a, iso_b, iso_max_size);
        if (fixtures->parsed()) return run_fixtures(fixtures_name);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.message << "\n";
        return 2;
    }
    return 2;
}
