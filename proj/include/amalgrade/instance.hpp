#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace amalgrade {

// One parsed declaration. The file format is a flat list of statements, each
// binding a name; later statements may only reference earlier names, so a
// parsed file is a DAG by construction. Polynomial fragments are kept as the
// written text (validated against the declared variables at parse time) and
// only turned into ring elements when a run builds the objects.
struct Decl {
    enum class Kind { Ring, Ideal, Map, Module, Amalgam, Family, Check };

    Kind kind;
    std::string name;

    // ring: field, variables, optional quotient generators
    std::uint64_t prime = 0; // 0 = QQ, otherwise Fp(prime)
    std::vector<std::string> vars;
    std::vector<std::string> ring_quotient;

    // ideal / map / module / family / check: the single referenced ring or
    // object names, in the order they appear in the statement
    std::vector<std::string> refs;

    // ideal: generators; map: images
    std::vector<std::string> polys;

    // module: one of "free" (rank), "ideal" (polys = generators),
    //         "cokernel" (rank + relation rows)
    std::string module_form;
    std::size_t rank = 0;
    std::vector<std::vector<std::string>> rows;

    // amalgam: construction "duplication" | "trivial_extension" | "amalgam";
    // the general form carries tag generators, an optional module reference
    // (refs gets it last), and the two flags
    std::string construction;
    std::vector<std::string> gens;
    bool algebra_mode = false;
    bool nilpotent = false;
    bool attested = false;

    // family: "maximal_graded" | "explicit" | "monomial_sample" (+ params)
    std::string family_form;
    std::size_t count = 25, degree_bound = 3, max_gens = 3;
    std::optional<std::uint64_t> seed; // absent: the runner's seed applies

    // check: operation "cm" | "theorem_maximal" | "theorem_nilpotent" |
    //        "lemma_grade_min" | "integral_flat"; optional basis fragments
    std::string op;
    std::vector<std::string> basis;

    friend bool operator==(const Decl&, const Decl&) = default;
};

struct InstanceFile {
    std::string name; // from the `instance` statement; empty if none
    std::vector<Decl> decls;
    // expected verdicts: (check name, verdict string as printed by verdict_name)
    std::vector<std::pair<std::string, std::string>> expects;

    friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

// Parses the instance DSL. Grammar, one statement per `;`, `#` comments:
//
//   instance NAME
//   ring    A = QQ[x, y]               (or Fp(32003)[...]; optional / (f, g))
//   ideal   I in A = (x, y^2)
//   map     f : A -> B = (x^2)          images of A's variables, in order
//   module  M over A = free 2 | ideal (x, y) | cokernel(2; (y, -x), ...)
//   amalgam R = duplication(A, I) | trivial_extension(A, M)
//               | amalgam(A, B, f, J; gens = (s^2, s^3); mode = module(M)
//                         | mode = algebra; nilpotent; attested)
//   family  F over A = maximal_graded | explicit(I1, I2)
//               | monomial_sample(count = 25, degree = 3, gens = 3, seed = 42)
//   check   c1 = cm(A, F) | theorem_maximal(R) | theorem_nilpotent(R, F)
//               | lemma_grade_min(R, I) | integral_flat(R, F; basis = (1, s))
//   expect  c1 = counterexample
//
// Unknown references, redefinitions, kind mismatches, and malformed
// polynomial fragments all raise ParseError with a line and column.
InstanceFile parse_instance(const std::string& text);

// Canonical text form; parse(pretty_print(f)) is structurally identical to f.
std::string pretty_print(const InstanceFile& f);

} // namespace amalgrade
