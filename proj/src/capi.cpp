#include "singq.h"

#include <array>
#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>

#include "singq/coloring.hpp"
#include "singq/constructions.hpp"
#include "singq/io.hpp"

struct singq_group {
    singq::FiniteGroup g;
};
struct singq_structure {
    singq::StructureTables t;
};
struct singq_report {
    singq::AxiomReport r;
};
struct singq_diagram {
    singq::SingularDiagram d;
};
struct singq_colorings {
    singq::ColoringSet c;
};
struct singq_structure_list {
    std::vector<singq::StructureTables> items;
};

namespace {

thread_local std::string g_last_error;

singq_status fail(singq_status st, const char* msg) {
    g_last_error = msg;
    return st;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
singq_status guarded(Fn&& fn) {
    try {
        fn();
        return SINGQ_OK;
    } catch (const singq::ParseError& e) {
        return fail(SINGQ_ERR_PARSE, e.what());
    } catch (const singq::TooLargeError& e) {
        return fail(SINGQ_ERR_TOO_LARGE, e.what());
    } catch (const singq::AxiomError& e) {
        return fail(SINGQ_ERR_AXIOM, e.what());
    } catch (const singq::DomainError& e) {
        return fail(SINGQ_ERR_DOMAIN, e.what());
    } catch (const std::exception& e) {
        return fail(SINGQ_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(SINGQ_ERR_INTERNAL, "unknown error");
    }
}

singq_status invalid(const char* msg) { return fail(SINGQ_ERR_INVALID_ARG, msg); }

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

singq::StructureTables tables_of(const singq::OrientedSingquandle& s) {
    singq::StructureTables t;
    t.op = s.op();
    t.r1 = s.r1();
    t.r2 = s.r2();
    return t;
}

singq::StructureTables tables_of(const singq::Quandle& q) {
    singq::StructureTables t;
    t.op = q.op();
    return t;
}

// Views the raw tables as an oriented singquandle; a plain quandle is
// extended with R1(x,y) = x, R2(x,y) = y, which satisfies the axioms and
// adds no constraints, so quandle semantics are preserved.
singq::OrientedSingquandle as_singquandle(const singq::StructureTables& t) {
    singq::Quandle q = singq::Quandle::from_table(t.op);
    if (t.is_singquandle())
        return singq::OrientedSingquandle(std::move(q), *t.r1, *t.r2);
    const int n = t.op.size();
    singq::OpTable r1(n), r2(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            r1.set(x, y, x);
            r2.set(x, y, y);
        }
    return singq::OrientedSingquandle(std::move(q), std::move(r1), std::move(r2));
}

singq::ColoringLimits limits_from(int max_semiarcs, int max_carrier) {
    singq::ColoringLimits lim;
    if (max_semiarcs > 0) lim.max_semiarcs = max_semiarcs;
    if (max_carrier > 0) lim.max_carrier = max_carrier;
    return lim;
}

// Stable storage so returned axiom-name pointers stay valid.
const char* axiom_cname(singq::AxiomId id) {
    static const std::array<std::string, 8> names = [] {
        std::array<std::string, 8> a;
        for (int i = 0; i < 8; ++i)
            a[static_cast<size_t>(i)] =
                singq::axiom_name(static_cast<singq::AxiomId>(i));
        return a;
    }();
    return names[static_cast<size_t>(id)].c_str();
}

bool has_singular(const singq::SingularDiagram& d) {
    for (const auto& c : d.crossings)
        if (c.kind == singq::CrossingKind::Singular) return true;
    return false;
}

void require_colorable(const singq_diagram* d, const singq_structure* s) {
    if (!s->t.is_singquandle() && has_singular(d->d))
        throw singq::DomainError(
            "a diagram with singular crossings needs a singquandle, not a "
            "plain quandle");
}

}  // namespace

extern "C" {

const char* singq_last_error(void) { return g_last_error.c_str(); }

void singq_string_free(char* s) { std::free(s); }

/* ---- groups ---- */

singq_status singq_group_named(const char* name, singq_group** out) {
    if (!name || !out) return invalid("NULL argument");
    *out = nullptr;
    return guarded([&] { *out = new singq_group{singq::named_group(name)}; });
}

singq_status singq_group_parse(const char* text, singq_group** out) {
    if (!text || !out) return invalid("NULL argument");
    *out = nullptr;
    return guarded([&] { *out = new singq_group{singq::parse_group(text)}; });
}

singq_status singq_group_format(const singq_group* g, char** out) {
    if (!g || !out) return invalid("NULL argument");
    *out = nullptr;
    return guarded([&] { *out = dup_string(singq::format_group(g->g)); });
}

int singq_group_order(const singq_group* g) { return g ? g->g.order() : 0; }

void singq_group_free(singq_group* g) { delete g; }

/* ---- structures ---- */

singq_status singq_structure_parse(const char* text, singq_structure** out) {
    if (!text || !out) return invalid("NULL argument");
    *out = nullptr;
    return guarded(
        [&] { *out = new singq_structure{singq::parse_structure(text)}; });
}

singq_status singq_structure_format(const singq_structure* s, char** out) {
    if (!s || !out) return invalid("NULL argument");
    *out = nullptr;
    return guarded([&] { *out = dup_string(singq::format_structure(s->t)); });
}

int singq_structure_size(const singq_structure* s) {
    return s ? s->t.op.size() : 0;
}

int singq_structure_is_singquandle(const singq_structure* s) {
    return s && s->t.is_singquandle() ? 1 : 0;
}

void singq_structure_free(singq_structure* s) { delete s; }

/* ---- builders ---- */

singq_status singq_build_trivial(int n, singq_structure** out) {
    if (!out) return invalid("NULL argument");
    *out = nullptr;
    return guarded(
        [&] { *out = new singq_structure{tables_of(singq::trivial_quandle(n))}; });
}

singq_status singq_build_dihedral(int n, singq_structure** out) {
    if (!out) return invalid("NULL argument");
    *out = nullptr;
    return guarded(
        [&] { *out = new singq_structure{tables_of(singq::dihedral_quandle(n))}; });
}

singq_status singq_build_affine(int n, long long a, singq_structure** out) {
    if (!out) return invalid("NULL argument");
    *out = nullptr;
    return guarded(
        [&] { *out = new singq_structure{tables_of(singq::affine_quandle(n, a))}; });
}

singq_status singq_build_conjugation(const singq_group* g, int m,
                                     singq_structure** out) {
    if (!g || !out) return invalid("NULL argument");
    *out = nullptr;
    return guarded([&] {
        *out = new singq_structure{tables_of(singq::conjugation_quandle(g->g, m))};
    });
}

singq_status singq_build_affine_singquandle(int n, long long a, long long b,
                                            singq_structure** out) {
    if (!out) return invalid("NULL argument");
    *out = nullptr;
    return guarded([&] {
        *out = new singq_structure{tables_of(singq::affine_singquandle(n, a, b))};
    });
}

singq_status singq_build_alexander_singquandle(int n, long long t, long long v,
                                               long long a, long long b,
                                               long long c, char** note_out,
                                               singq_structure** out) {
    if (!out) return invalid("NULL argument");
    *out = nullptr;
    if (note_out) *note_out = nullptr;
    return guarded([&] {
        std::string note;
        auto s = singq::alexander_singquandle(n, t, v, a, b, c, &note);
        if (note_out) *note_out = note.empty() ? nullptr : dup_string(note);
        *out = new singq_structure{tables_of(s)};
    });
}

singq_status singq_build_abelian_fg(const singq_group* g, const int* f,
                                    const int* h, singq_structure** out) {
    if (!g || !f || !h || !out) return invalid("NULL argument");
    *out = nullptr;
    return guarded([&] {
        const size_t n = static_cast<size_t>(g->g.order());
        std::vector<int> fv(f, f + n), hv(h, h + n);
        *out = new singq_structure{
            tables_of(singq::abelian_fg_singquandle(g->g, fv, hv))};
    });
}

singq_status singq_build_conj_solution(const singq_group* g, int k, int n,
                                       singq_structure** out) {
    if (!g || !out) return invalid("NULL argument");
    *out = nullptr;
    return guarded([&] {
        *out = new singq_structure{
            tables_of(singq::conj_solution_singquandle(g->g, k, n))};
    });
}

singq_status singq_build_prop_family(const singq_group* g, int family, int n,
                                     singq_structure** out) {
    if (!g || !out) return invalid("NULL argument");
    *out = nullptr;
    return guarded([&] {
        *out = new singq_structure{
            tables_of(singq::prop_family_singquandle(g->g, family, n))};
    });
}

/* ---- checking ---- */

singq_status singq_structure_check(const singq_structure* s, singq_report** out) {
    if (!s || !out) return invalid("NULL argument");
    *out = nullptr;
    return guarded([&] {
        const singq::OpTable* r1 = s->t.r1 ? &*s->t.r1 : nullptr;
        const singq::OpTable* r2 = s->t.r2 ? &*s->t.r2 : nullptr;
        *out = new singq_report{singq::check_tables(s->t.op, r1, r2)};
    });
}

int singq_report_size(const singq_report* r) {
    return r ? static_cast<int>(r->r.entries.size()) : 0;
}

singq_status singq_report_entry(const singq_report* r, int i,
                                const char** axiom_out, int* status_out,
                                int witness_out[3], int* witness_len_out) {
    if (!r) return invalid("NULL argument");
    if (i < 0 || i >= static_cast<int>(r->r.entries.size()))
        return invalid("report entry index out of range");
    return guarded([&] {
        const auto& e = r->r.entries[static_cast<size_t>(i)];
        if (axiom_out) *axiom_out = axiom_cname(e.id);
        if (status_out) *status_out = static_cast<int>(e.status);
        int len = static_cast<int>(e.witness.size());
        if (len > 3) len = 3;
        if (witness_out)
            for (int k = 0; k < len; ++k) witness_out[k] = e.witness[static_cast<size_t>(k)];
        if (witness_len_out) *witness_len_out = len;
    });
}

int singq_report_all_passed(const singq_report* r) {
    return r && r->r.all_passed() ? 1 : 0;
}

void singq_report_free(singq_report* r) { delete r; }

/* ---- enumeration ---- */

singq_status singq_enumerate(const singq_structure* quandle, uint64_t limit,
                             int max_carrier, singq_structure_list** out) {
    if (!quandle || !out) return invalid("NULL argument");
    *out = nullptr;
    if (max_carrier <= 0) max_carrier = 4;
    return guarded([&] {
        singq::Quandle q = singq::Quandle::from_table(quandle->t.op);
        auto found = singq::enumerate_singquandles(q, limit, max_carrier);
        auto* list = new singq_structure_list;
        list->items.reserve(found.size());
        for (const auto& s : found) list->items.push_back(tables_of(s));
        *out = list;
    });
}

singq_status singq_count(const singq_structure* quandle, int max_carrier,
                         uint64_t* out) {
    if (!quandle || !out) return invalid("NULL argument");
    *out = 0;
    if (max_carrier <= 0) max_carrier = 4;
    return guarded([&] {
        singq::Quandle q = singq::Quandle::from_table(quandle->t.op);
        *out = singq::count_singquandles(q, max_carrier);
    });
}

int singq_structure_list_size(const singq_structure_list* l) {
    return l ? static_cast<int>(l->items.size()) : 0;
}

singq_status singq_structure_list_get(const singq_structure_list* l, int i,
                                      singq_structure** out) {
    if (!l || !out) return invalid("NULL argument");
    *out = nullptr;
    if (i < 0 || i >= static_cast<int>(l->items.size()))
        return invalid("list index out of range");
    return guarded(
        [&] { *out = new singq_structure{l->items[static_cast<size_t>(i)]}; });
}

void singq_structure_list_free(singq_structure_list* l) { delete l; }

/* ---- isomorphism ---- */

singq_status singq_find_isomorphism(const singq_structure* s,
                                    const singq_structure* t, int max_size,
                                    int* found_out, int* images_out) {
    if (!s || !t || !found_out) return invalid("NULL argument");
    *found_out = 0;
    if (max_size <= 0) max_size = 12;
    return guarded([&] {
        if (s->t.is_singquandle() != t->t.is_singquandle())
            throw singq::DomainError(
                "cannot compare a plain quandle with a singquandle");
        auto witness = singq::find_isomorphism(as_singquandle(s->t),
                                               as_singquandle(t->t), max_size);
        *found_out = witness ? 1 : 0;
        if (witness && images_out)
            for (size_t i = 0; i < witness->images.size(); ++i)
                images_out[i] = witness->images[i];
    });
}

/* ---- diagrams ---- */

singq_status singq_diagram_parse(const char* text, singq_diagram** out) {
    if (!text || !out) return invalid("NULL argument");
    *out = nullptr;
    return guarded([&] { *out = new singq_diagram{singq::parse_diagram(text)}; });
}

singq_status singq_diagram_serialize(const singq_diagram* d, char** out) {
    if (!d || !out) return invalid("NULL argument");
    *out = nullptr;
    return guarded([&] { *out = dup_string(singq::serialize_diagram(d->d)); });
}

int singq_diagram_semiarc_count(const singq_diagram* d) {
    return d ? d->d.semiarc_count : 0;
}

int singq_diagram_crossing_count(const singq_diagram* d) {
    return d ? static_cast<int>(d->d.crossings.size()) : 0;
}

void singq_diagram_free(singq_diagram* d) { delete d; }

int singq_fixture_count(void) {
    return static_cast<int>(singq::fixture_list().size());
}

const char* singq_fixture_name(int i) {
    const auto& list = singq::fixture_list();
    if (i < 0 || i >= static_cast<int>(list.size())) return nullptr;
    return list[static_cast<size_t>(i)].name.c_str();
}

const char* singq_fixture_description(int i) {
    const auto& list = singq::fixture_list();
    if (i < 0 || i >= static_cast<int>(list.size())) return nullptr;
    return list[static_cast<size_t>(i)].description.c_str();
}

singq_status singq_fixture_get(const char* name, singq_diagram** out) {
    if (!name || !out) return invalid("NULL argument");
    *out = nullptr;
    return guarded([&] { *out = new singq_diagram{singq::fixture(name)}; });
}

/* ---- coloring ---- */

singq_status singq_colorings_compute(const singq_diagram* d,
                                     const singq_structure* s, uint64_t limit,
                                     int max_semiarcs, int max_carrier,
                                     singq_colorings** out) {
    if (!d || !s || !out) return invalid("NULL argument");
    *out = nullptr;
    return guarded([&] {
        require_colorable(d, s);
        *out = new singq_colorings{
            singq::enumerate_colorings(d->d, as_singquandle(s->t), limit,
                                       limits_from(max_semiarcs, max_carrier))};
    });
}

singq_status singq_colorings_count(const singq_diagram* d,
                                   const singq_structure* s, int max_semiarcs,
                                   int max_carrier, uint64_t* out) {
    if (!d || !s || !out) return invalid("NULL argument");
    *out = 0;
    return guarded([&] {
        require_colorable(d, s);
        *out = singq::count_colorings(d->d, as_singquandle(s->t),
                                      limits_from(max_semiarcs, max_carrier));
    });
}

uint64_t singq_colorings_size(const singq_colorings* c) {
    return c ? c->c.count() : 0;
}

int singq_colorings_semiarc_count(const singq_colorings* c) {
    return c ? c->c.semiarc_count : 0;
}

singq_status singq_colorings_get(const singq_colorings* c, uint64_t i,
                                 int* out) {
    if (!c || !out) return invalid("NULL argument");
    if (i >= c->c.colorings.size())
        return invalid("coloring index out of range");
    return guarded([&] {
        const auto& col = c->c.colorings[static_cast<size_t>(i)];
        for (size_t k = 0; k < col.size(); ++k) out[k] = col[k];
    });
}

void singq_colorings_free(singq_colorings* c) { delete c; }

}  // extern "C"
