/* Public C API for the singq library.
 *
 * Conventions:
 *   - Every function that can fail returns singq_status; SINGQ_OK is 0.
 *     On failure, singq_last_error() returns a thread-local message valid
 *     until the next failing call on the same thread.
 *   - Output parameters carry a result only on SINGQ_OK.  On failure,
 *     handle/string outputs are set to NULL and count/flag outputs to 0;
 *     caller-provided array buffers are left untouched.
 *   - char** outputs receive a heap string owned by the caller; release it
 *     with singq_string_free.
 *   - Handles are opaque; each has a matching *_free that accepts NULL.
 *
 * Structure files (see singq_structure_parse):
 *   "quandle n=<N>" followed by "op:" and N rows of N entries, or
 *   "singquandle n=<N>" followed by "op:", "r1:", "r2:" blocks.
 *   Group files: "group n=<N>" followed by "mul:".  Entries are element
 *   indices in 0..N-1; '#' starts a comment.
 *
 * Diagram files (see singq_diagram_parse): one crossing per line,
 *   "P u o u' o'" / "N u o u' o'" (under_in, over_in, under_out, over_out)
 *   or "S l r l' r'" (in_left, in_right, out_left, out_right).
 */
#ifndef SINGQ_H
#define SINGQ_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum singq_status {
    SINGQ_OK = 0,
    SINGQ_ERR_DOMAIN = 1,      /* parameter outside an operation's domain */
    SINGQ_ERR_TOO_LARGE = 2,   /* a size guard refused the input */
    SINGQ_ERR_PARSE = 3,       /* malformed text input */
    SINGQ_ERR_AXIOM = 4,       /* a required axiom does not hold */
    SINGQ_ERR_INVALID_ARG = 5, /* NULL handle or out-of-range argument */
    SINGQ_ERR_IO = 6,          /* file could not be read or written */
    SINGQ_ERR_INTERNAL = 7     /* unexpected failure */
} singq_status;

typedef enum singq_axiom_status {
    SINGQ_AXIOM_PASS = 0,
    SINGQ_AXIOM_FAIL = 1,
    SINGQ_AXIOM_SKIPPED = 2 /* not evaluated because the quandle part failed */
} singq_axiom_status;

typedef struct singq_group singq_group;
typedef struct singq_structure singq_structure;
typedef struct singq_report singq_report;
typedef struct singq_diagram singq_diagram;
typedef struct singq_colorings singq_colorings;
typedef struct singq_structure_list singq_structure_list;

/* Thread-local message describing the most recent failure on this thread. */
const char* singq_last_error(void);
void singq_string_free(char* s);

/* ---- finite groups -------------------------------------------------- */

/* name: "z<k>" (cyclic), "d<k>" (dihedral, order 2k), "s<k>" (symmetric,
 * k <= 5), or "q8". */
singq_status singq_group_named(const char* name, singq_group** out);
singq_status singq_group_parse(const char* text, singq_group** out);
singq_status singq_group_format(const singq_group* g, char** out);
int singq_group_order(const singq_group* g);
void singq_group_free(singq_group* g);

/* ---- structures (quandles and oriented singquandles) ----------------- */

/* Accepts both "quandle" and "singquandle" headers.  Entries are range
 * checked; axioms are NOT checked here (see singq_structure_check). */
singq_status singq_structure_parse(const char* text, singq_structure** out);
singq_status singq_structure_format(const singq_structure* s, char** out);
int singq_structure_size(const singq_structure* s);
int singq_structure_is_singquandle(const singq_structure* s);
void singq_structure_free(singq_structure* s);

/* ---- builders --------------------------------------------------------
 * Quandle builders produce quandle structures; singquandle builders produce
 * structures with R1/R2.  All outputs satisfy their axioms by construction.
 */

singq_status singq_build_trivial(int n, singq_structure** out);
singq_status singq_build_dihedral(int n, singq_structure** out);
/* x*y = ax + (1-a)y over Z_n; requires gcd(a, n) = 1. */
singq_status singq_build_affine(int n, long long a, singq_structure** out);
/* x*y = y^-m x y^m over g. */
singq_status singq_build_conjugation(const singq_group* g, int m,
                                     singq_structure** out);

/* R1 = bx + (1-b)y, R2 = a(1-b)x + (1-a(1-b))y over the affine quandle. */
singq_status singq_build_affine_singquandle(int n, long long a, long long b,
                                            singq_structure** out);
/* With alpha = at + bv + ctv: R1 = alpha x + (1-alpha)y,
 * R2 = t(1-alpha)x + (1-t(1-alpha))y over x*y = tx + (1-t)y.  When note_out
 * is non-NULL it receives either NULL or a heap string explaining the choice
 * of R2's y-coefficient for this parameter point. */
singq_status singq_build_alexander_singquandle(int n, long long t, long long v,
                                               long long a, long long b,
                                               long long c, char** note_out,
                                               singq_structure** out);
/* Over abelian g with automorphism f and endomorphism h, given as image
 * arrays of length order(g), with f o h = h o f:
 * x*y = f(x)+y-f(y), R1 = h(y)+x-h(x), R2 = h(f(x))+y-h(f(y)). */
singq_status singq_build_abelian_fg(const singq_group* g, const int* f,
                                    const int* h, singq_structure** out);
/* Word solutions over the conjugation quandle of g; k in 1..5, and n >= 1
 * selects the member for k = 5 (ignored otherwise). */
singq_status singq_build_conj_solution(const singq_group* g, int k, int n,
                                       singq_structure** out);
/* Word families 1..3 over the conjugation quandle of g, n >= 1. */
singq_status singq_build_prop_family(const singq_group* g, int family, int n,
                                     singq_structure** out);

/* ---- axiom checking --------------------------------------------------
 * The report lists the three quandle axioms, plus the five singquandle
 * axioms when the structure has R1/R2.  A failing entry carries a witness
 * (1-3 element indices, axiom-specific).
 */

singq_status singq_structure_check(const singq_structure* s, singq_report** out);
int singq_report_size(const singq_report* r);
singq_status singq_report_entry(const singq_report* r, int i,
                                const char** axiom_out, int* status_out,
                                int witness_out[3], int* witness_len_out);
int singq_report_all_passed(const singq_report* r);
void singq_report_free(singq_report* r);

/* ---- enumeration ------------------------------------------------------
 * All oriented singquandles over a fixed quandle, in lexicographic order of
 * the R1 table.  `quandle` may be either kind of structure; only its op
 * table is used and it must satisfy the quandle axioms.  limit 0 = all;
 * max_carrier <= 0 selects the default guard (4).
 */

singq_status singq_enumerate(const singq_structure* quandle, uint64_t limit,
                             int max_carrier, singq_structure_list** out);
singq_status singq_count(const singq_structure* quandle, int max_carrier,
                         uint64_t* out);
int singq_structure_list_size(const singq_structure_list* l);
/* Returns a fresh handle for element i; free it independently. */
singq_status singq_structure_list_get(const singq_structure_list* l, int i,
                                      singq_structure** out);
void singq_structure_list_free(singq_structure_list* l);

/* ---- isomorphism ------------------------------------------------------
 * Exhaustive search with pruning; carriers above max_size are refused, and
 * max_size <= 0 selects the default guard (12).  Both structures must be of
 * the same kind; two plain quandles are compared
 * as quandles.  On SINGQ_OK, *found_out is 0 or 1; when 1, images_out (a
 * caller buffer of at least singq_structure_size(s) ints) receives the
 * lexicographically first isomorphism.
 */
singq_status singq_find_isomorphism(const singq_structure* s,
                                    const singq_structure* t, int max_size,
                                    int* found_out, int* images_out);

/* ---- diagrams --------------------------------------------------------- */

singq_status singq_diagram_parse(const char* text, singq_diagram** out);
singq_status singq_diagram_serialize(const singq_diagram* d, char** out);
int singq_diagram_semiarc_count(const singq_diagram* d);
int singq_diagram_crossing_count(const singq_diagram* d);
void singq_diagram_free(singq_diagram* d);

int singq_fixture_count(void);
/* Static strings; do not free.  NULL when i is out of range. */
const char* singq_fixture_name(int i);
const char* singq_fixture_description(int i);
singq_status singq_fixture_get(const char* name, singq_diagram** out);

/* ---- coloring ----------------------------------------------------------
 * Enumerates colorings of d by s, sorted lexicographically.  limit 0 = all;
 * a nonzero limit keeps the first `limit` colorings in search order.
 * max_semiarcs/max_carrier <= 0 select the defaults (64 each).  A plain
 * quandle structure is accepted when the diagram has no singular crossing.
 * The structure's quandle axioms must hold; R1/R2 axioms are NOT enforced
 * here so that defective candidates can still be explored.
 */

singq_status singq_colorings_compute(const singq_diagram* d,
                                     const singq_structure* s, uint64_t limit,
                                     int max_semiarcs, int max_carrier,
                                     singq_colorings** out);
singq_status singq_colorings_count(const singq_diagram* d,
                                   const singq_structure* s, int max_semiarcs,
                                   int max_carrier, uint64_t* out);
uint64_t singq_colorings_size(const singq_colorings* c);
int singq_colorings_semiarc_count(const singq_colorings* c);
/* Writes coloring i into out, one entry per semiarc. */
singq_status singq_colorings_get(const singq_colorings* c, uint64_t i,
                                 int* out);
void singq_colorings_free(singq_colorings* c);

#ifdef __cplusplus
}
#endif

#endif /* SINGQ_H */
