#include "amalgrade/instance.hpp"

#include "amalgrade/amalgam.hpp"
#include "amalgrade/errors.hpp"
#include "amalgrade/polynomial.hpp"

#include <map>
#include <set>

namespace amalgrade {

namespace {

const std::set<std::string> kVerdicts = {"CM-over-family", "counterexample", "consistent",
                                         "violated", "inapplicable"};

// What the checker and runner need to know about a bound name while parsing:
// its kind, and enough ring shape to validate polynomial fragments early.
struct Sym {
    Decl::Kind kind;
    std::size_t index;
    std::string ring;   // ideal/module/family: owning ring; map: source; amalgam: base
    std::string target; // map: target; amalgam: second ring
};

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    InstanceFile parse() {
        while (!eof()) statement();
        return std::move(out_);
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    int frag_line_ = 1, frag_col_ = 1; // start of the last fragment() read
    int tok_line_ = 1, tok_col_ = 1;   // start of the last ident() read
    InstanceFile out_;
    std::map<std::string, Sym> syms_;
    std::map<std::string, PolyRingPtr> scratch_; // per ring-like name

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

    // For complaints about a name: point at the name, not past it.
    [[noreturn]] void fail_name(const std::string& msg) const {
        throw ParseError(msg, tok_line_, tok_col_);
    }

    void step() {
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n') step();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                step();
            } else {
                break;
            }
        }
    }

    bool eof() {
        skip_ws();
        return pos_ >= s_.size();
    }

    static bool ident_char(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
               c == '_';
    }

    // Literal punctuation (or a keyword when it ends at a word boundary).
    bool try_tok(const std::string& t) {
        skip_ws();
        if (s_.compare(pos_, t.size(), t) != 0) return false;
        if (ident_char(t.back()) && pos_ + t.size() < s_.size() && ident_char(s_[pos_ + t.size()]))
            return false;
        for (std::size_t i = 0; i < t.size(); ++i) step();
        return true;
    }

    void expect(const std::string& t) {
        if (!try_tok(t)) fail("expected '" + t + "'");
    }

    std::string ident() {
        skip_ws();
        tok_line_ = line_;
        tok_col_ = col_;
        if (pos_ >= s_.size() || !ident_char(s_[pos_]) || (s_[pos_] >= '0' && s_[pos_] <= '9'))
            fail("expected a name");
        std::string w;
        while (pos_ < s_.size() && ident_char(s_[pos_])) {
            w += s_[pos_];
            step();
        }
        return w;
    }

    std::uint64_t integer() {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] < '0' || s_[pos_] > '9') fail("expected an integer");
        std::uint64_t v = 0;
        while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') {
            v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
            step();
        }
        return v;
    }

    // Raw text up to a top-level ',' ')' or ';', parentheses respected.
    std::string fragment() {
        skip_ws();
        frag_line_ = line_;
        frag_col_ = col_;
        std::string w;
        int depth = 0;
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (depth == 0 && (c == ',' || c == ')' || c == ';')) break;
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (c == '#') {
                skip_ws();
                w += ' ';
                continue;
            }
            w += c;
            step();
        }
        while (!w.empty() && (w.back() == ' ' || w.back() == '\t' || w.back() == '\n' ||
                              w.back() == '\r'))
            w.pop_back();
        if (w.empty()) fail("empty polynomial");
        return w;
    }

    const Sym& lookup(const std::string& name, const char* what) const {
        auto it = syms_.find(name);
        if (it == syms_.end()) fail_name("unknown " + std::string(what) + " '" + name + "'");
        return it->second;
    }

    const Sym& ref(Decl::Kind k, const char* what) {
        std::string name = ident();
        const Sym& sym = lookup(name, what);
        if (sym.kind != k) fail_name("'" + name + "' is not a " + std::string(what));
        return sym;
    }

    // A ring or an amalgam; both own a scratch cover for fragment checking.
    const Sym& ring_like(std::string* name_out) {
        std::string name = ident();
        const Sym& sym = lookup(name, "ring");
        if (sym.kind != Decl::Kind::Ring && sym.kind != Decl::Kind::Amalgam)
            fail_name("'" + name + "' is not a ring or amalgam");
        if (name_out) *name_out = name;
        return sym;
    }

    void check_fragment(const std::string& ring_name, const std::string& text) {
        auto it = scratch_.find(ring_name);
        if (it == scratch_.end()) return; // no cover known; the build will check
        try {
            parse_polynomial(it->second, text);
        } catch (const ParseError& e) {
            int ln = e.line == 1 ? frag_line_ : frag_line_ + e.line - 1;
            int cl = e.line == 1 ? frag_col_ + e.col - 1 : e.col;
            throw ParseError("bad polynomial over " + ring_name, ln, cl);
        }
    }

    // "( f, g, ... )" with the '(' already consumed; validates each entry.
    std::vector<std::string> fragment_list(const std::string& ring_name) {
        std::vector<std::string> out;
        if (try_tok(")")) return out;
        for (;;) {
            out.push_back(fragment());
            check_fragment(ring_name, out.back());
            if (try_tok(",")) continue;
            expect(")");
            break;
        }
        return out;
    }

    std::string fresh(const std::string& name) {
        if (syms_.count(name)) fail_name("'" + name + "' is already defined");
        return name;
    }

    void bind(const std::string& name, Decl::Kind k, std::string ring = "",
              std::string target = "") {
        syms_[name] = Sym{k, out_.decls.size(), std::move(ring), std::move(target)};
    }

    const Decl& decl_of(const Sym& sym) const { return out_.decls[sym.index]; }

    // Number of tags an amalgam declaration will produce, read off the text.
    std::size_t declared_tag_count(const Decl& d) const {
        if (d.construction == "duplication")
            return decl_of(lookup(d.refs[1], "ideal")).polys.size();
        if (d.construction == "trivial_extension") {
            const Decl& m = decl_of(lookup(d.refs[1], "module"));
            return m.module_form == "ideal" ? m.polys.size() : m.rank;
        }
        return d.gens.size();
    }

    void statement() {
        std::string kw = ident();
        if (kw == "instance") {
            out_.name = ident();
        } else if (kw == "ring") {
            ring_stmt();
        } else if (kw == "ideal") {
            ideal_stmt();
        } else if (kw == "map") {
            map_stmt();
        } else if (kw == "module") {
            module_stmt();
        } else if (kw == "amalgam") {
            amalgam_stmt();
        } else if (kw == "family") {
            family_stmt();
        } else if (kw == "check") {
            check_stmt();
        } else if (kw == "expect") {
            expect_stmt();
        } else {
            fail("unknown keyword '" + kw + "'");
        }
        expect(";");
    }

    PolyRingPtr make_scratch(std::uint64_t prime, const std::vector<std::string>& vars) {
        Field f = prime == 0 ? Field::rationals() : Field::modular(prime);
        return PolyRing::create(vars, f, MonomialOrder::degrevlex());
    }

    void ring_stmt() {
        Decl d;
        d.kind = Decl::Kind::Ring;
        d.name = fresh(ident());
        expect("=");
        std::string f = ident();
        if (f == "QQ") {
            d.prime = 0;
        } else if (f == "Fp") {
            expect("(");
            d.prime = integer();
            if (d.prime >= (1ULL << 31)) fail("prime out of range");
            expect(")");
        } else {
            fail("expected QQ or Fp(p)");
        }
        expect("[");
        if (!try_tok("]")) {
            do {
                d.vars.push_back(ident());
            } while (try_tok(","));
            expect("]");
        }
        for (std::size_t i = 0; i < d.vars.size(); ++i)
            for (std::size_t j = i + 1; j < d.vars.size(); ++j)
                if (d.vars[i] == d.vars[j]) fail("repeated variable '" + d.vars[i] + "'");

        PolyRingPtr cover;
        try {
            cover = make_scratch(d.prime, d.vars);
        } catch (const Error& e) {
            fail(e.what());
        }
        scratch_[d.name] = cover;
        bind(d.name, Decl::Kind::Ring);
        out_.decls.push_back(d); // bind first so the quotient may not self-reference

        if (try_tok("/")) {
            expect("(");
            out_.decls.back().ring_quotient = fragment_list(d.name);
        }
    }

    void ideal_stmt() {
        Decl d;
        d.kind = Decl::Kind::Ideal;
        d.name = fresh(ident());
        expect("in");
        std::string rname;
        ring_like(&rname);
        d.refs.push_back(rname);
        expect("=");
        expect("(");
        d.polys = fragment_list(rname);
        bind(d.name, Decl::Kind::Ideal, rname);
        out_.decls.push_back(std::move(d));
    }

    void map_stmt() {
        Decl d;
        d.kind = Decl::Kind::Map;
        d.name = fresh(ident());
        expect(":");
        const Sym& src = ref(Decl::Kind::Ring, "ring");
        std::string src_name = decl_of(src).name;
        expect("->");
        const Sym& dst = ref(Decl::Kind::Ring, "ring");
        std::string dst_name = decl_of(dst).name;
        d.refs = {src_name, dst_name};
        expect("=");
        expect("(");
        d.polys = fragment_list(dst_name);
        if (d.polys.size() != decl_of(lookup(src_name, "ring")).vars.size())
            fail("map needs one image per source variable");
        bind(d.name, Decl::Kind::Map, src_name, dst_name);
        out_.decls.push_back(std::move(d));
    }

    void module_stmt() {
        Decl d;
        d.kind = Decl::Kind::Module;
        d.name = fresh(ident());
        expect("over");
        const Sym& r = ref(Decl::Kind::Ring, "ring");
        std::string rname = decl_of(r).name;
        d.refs.push_back(rname);
        expect("=");
        d.module_form = ident();
        if (d.module_form == "free") {
            d.rank = static_cast<std::size_t>(integer());
        } else if (d.module_form == "ideal") {
            expect("(");
            d.polys = fragment_list(rname);
        } else if (d.module_form == "cokernel") {
            expect("(");
            d.rank = static_cast<std::size_t>(integer());
            if (try_tok(";")) {
                do {
                    expect("(");
                    d.rows.push_back(fragment_list(rname));
                    if (d.rows.back().size() != d.rank)
                        fail("relation row needs one entry per generator");
                } while (try_tok(","));
            }
            expect(")");
        } else {
            fail("expected free, ideal, or cokernel");
        }
        bind(d.name, Decl::Kind::Module, rname);
        out_.decls.push_back(std::move(d));
    }

    void register_amalgam_scratch(const Decl& d, const std::string& base) {
        const Decl& A = decl_of(lookup(base, "ring"));
        std::vector<std::string> vars = A.vars;
        for (std::string& t : amalgam_tag_names(A.vars, declared_tag_count(d)))
            vars.push_back(std::move(t));
        try {
            scratch_[d.name] = make_scratch(A.prime, vars);
        } catch (const Error& e) {
            fail(e.what());
        }
    }

    void amalgam_stmt() {
        Decl d;
        d.kind = Decl::Kind::Amalgam;
        d.name = fresh(ident());
        expect("=");
        d.construction = ident();
        std::string base, second;
        if (d.construction == "duplication") {
            expect("(");
            const Sym& a = ref(Decl::Kind::Ring, "ring");
            base = second = decl_of(a).name;
            expect(",");
            const Sym& i = ref(Decl::Kind::Ideal, "ideal");
            if (i.ring != base) fail("ideal lives in a different ring");
            d.refs = {base, decl_of(i).name};
            expect(")");
        } else if (d.construction == "trivial_extension") {
            expect("(");
            const Sym& a = ref(Decl::Kind::Ring, "ring");
            base = second = decl_of(a).name;
            expect(",");
            const Sym& m = ref(Decl::Kind::Module, "module");
            if (m.ring != base) fail("module lives over a different ring");
            d.refs = {base, decl_of(m).name};
            expect(")");
        } else if (d.construction == "amalgam") {
            expect("(");
            const Sym& a = ref(Decl::Kind::Ring, "ring");
            base = decl_of(a).name;
            expect(",");
            const Sym& b = ref(Decl::Kind::Ring, "ring");
            second = decl_of(b).name;
            expect(",");
            const Sym& f = ref(Decl::Kind::Map, "map");
            if (f.ring != base || f.target != second) fail("map does not go between the two rings");
            std::string fname = decl_of(f).name;
            expect(",");
            const Sym& j = ref(Decl::Kind::Ideal, "ideal");
            if (j.ring != second) fail("tag ideal lives in a different ring");
            d.refs = {base, second, fname, decl_of(j).name};
            bool saw_mode = false;
            while (try_tok(";")) {
                if (try_tok("gens")) {
                    expect("=");
                    expect("(");
                    d.gens = fragment_list(second);
                } else if (try_tok("mode")) {
                    expect("=");
                    saw_mode = true;
                    if (try_tok("algebra")) {
                        d.algebra_mode = true;
                    } else {
                        expect("module");
                        expect("(");
                        const Sym& m = ref(Decl::Kind::Module, "module");
                        if (m.ring != base) fail("module lives over a different ring");
                        d.refs.push_back(decl_of(m).name);
                        expect(")");
                    }
                } else if (try_tok("nilpotent")) {
                    d.nilpotent = true;
                } else if (try_tok("attested")) {
                    d.attested = true;
                } else {
                    fail("expected gens, mode, nilpotent, or attested");
                }
            }
            expect(")");
            if (!saw_mode) d.algebra_mode = true;
            if (d.gens.empty()) d.gens = decl_of(j).polys; // default: J's generators tag
            if (d.refs.size() == 5) {
                const Decl& m = decl_of(lookup(d.refs[4], "module"));
                std::size_t mrank = m.module_form == "ideal" ? m.polys.size() : m.rank;
                if (mrank != d.gens.size())
                    fail("module rank must match the number of tag generators");
            }
        } else {
            fail("expected duplication, trivial_extension, or amalgam");
        }
        bind(d.name, Decl::Kind::Amalgam, base, second);
        out_.decls.push_back(d);
        register_amalgam_scratch(out_.decls.back(), base);
    }

    void family_stmt() {
        Decl d;
        d.kind = Decl::Kind::Family;
        d.name = fresh(ident());
        expect("over");
        std::string rname;
        ring_like(&rname);
        d.refs.push_back(rname);
        expect("=");
        d.family_form = ident();
        if (d.family_form == "maximal_graded") {
            // nothing more
        } else if (d.family_form == "explicit") {
            expect("(");
            do {
                const Sym& i = ref(Decl::Kind::Ideal, "ideal");
                if (i.ring != rname) fail("family member lives in a different ring");
                d.refs.push_back(decl_of(i).name);
            } while (try_tok(","));
            expect(")");
        } else if (d.family_form == "monomial_sample") {
            if (try_tok("(")) {
                do {
                    std::string key = ident();
                    expect("=");
                    std::uint64_t v = integer();
                    if (key == "count")
                        d.count = static_cast<std::size_t>(v);
                    else if (key == "degree")
                        d.degree_bound = static_cast<std::size_t>(v);
                    else if (key == "gens")
                        d.max_gens = static_cast<std::size_t>(v);
                    else if (key == "seed")
                        d.seed = v;
                    else
                        fail("expected count, degree, gens, or seed");
                } while (try_tok(","));
                expect(")");
            }
            if (d.count == 0 || d.degree_bound == 0 || d.max_gens == 0)
                fail("sample parameters must be positive");
        } else {
            fail("expected maximal_graded, explicit, or monomial_sample");
        }
        bind(d.name, Decl::Kind::Family, rname);
        out_.decls.push_back(std::move(d));
    }

    void check_stmt() {
        Decl d;
        d.kind = Decl::Kind::Check;
        d.name = fresh(ident());
        expect("=");
        d.op = ident();
        expect("(");
        if (d.op == "cm") {
            std::string rname;
            ring_like(&rname);
            d.refs.push_back(rname);
            expect(",");
            const Sym& f = ref(Decl::Kind::Family, "family");
            if (f.ring != rname) fail("family is over a different ring");
            d.refs.push_back(decl_of(f).name);
            expect(")");
        } else if (d.op == "theorem_maximal") {
            const Sym& r = ref(Decl::Kind::Amalgam, "amalgam");
            d.refs.push_back(decl_of(r).name);
            expect(")");
        } else if (d.op == "theorem_nilpotent" || d.op == "integral_flat") {
            const Sym& r = ref(Decl::Kind::Amalgam, "amalgam");
            d.refs.push_back(decl_of(r).name);
            expect(",");
            const Sym& f = ref(Decl::Kind::Family, "family");
            if (f.ring != r.ring) fail("family must be over the amalgam's base ring");
            d.refs.push_back(decl_of(f).name);
            if (d.op == "integral_flat" && try_tok(";")) {
                expect("basis");
                expect("=");
                expect("(");
                d.basis = fragment_list(r.target);
            }
            expect(")");
        } else if (d.op == "lemma_grade_min") {
            const Sym& r = ref(Decl::Kind::Amalgam, "amalgam");
            d.refs.push_back(decl_of(r).name);
            expect(",");
            const Sym& i = ref(Decl::Kind::Ideal, "ideal");
            if (i.ring != r.ring) fail("ideal must live in the amalgam's base ring");
            d.refs.push_back(decl_of(i).name);
            expect(")");
        } else {
            fail("expected cm, theorem_maximal, theorem_nilpotent, lemma_grade_min, or integral_flat");
        }
        bind(d.name, Decl::Kind::Check);
        out_.decls.push_back(std::move(d));
    }

    void expect_stmt() {
        const Sym& c = ref(Decl::Kind::Check, "check");
        std::string cname = decl_of(c).name;
        expect("=");
        skip_ws();
        std::string v;
        while (pos_ < s_.size() && (ident_char(s_[pos_]) || s_[pos_] == '-')) {
            v += s_[pos_];
            step();
        }
        if (!kVerdicts.count(v)) fail("unknown verdict '" + v + "'");
        for (const auto& [name, _] : out_.expects)
            if (name == cname) fail("duplicate expectation for '" + cname + "'");
        out_.expects.emplace_back(cname, v);
    }
};

std::string joined(const std::vector<std::string>& v) {
    std::string o;
    for (const auto& x : v) {
        if (!o.empty()) o += ", ";
        o += x;
    }
    return o;
}

} // namespace

InstanceFile parse_instance(const std::string& text) { return Parser(text).parse(); }

std::string pretty_print(const InstanceFile& f) {
    std::string o;
    if (!f.name.empty()) o += "instance " + f.name + ";\n";
    for (const Decl& d : f.decls) {
        switch (d.kind) {
            case Decl::Kind::Ring:
                o += "ring " + d.name + " = ";
                o += d.prime == 0 ? "QQ" : "Fp(" + std::to_string(d.prime) + ")";
                o += "[" + joined(d.vars) + "]";
                if (!d.ring_quotient.empty()) o += " / (" + joined(d.ring_quotient) + ")";
                break;
            case Decl::Kind::Ideal:
                o += "ideal " + d.name + " in " + d.refs[0] + " = (" + joined(d.polys) + ")";
                break;
            case Decl::Kind::Map:
                o += "map " + d.name + " : " + d.refs[0] + " -> " + d.refs[1] + " = (" +
                     joined(d.polys) + ")";
                break;
            case Decl::Kind::Module:
                o += "module " + d.name + " over " + d.refs[0] + " = ";
                if (d.module_form == "free") {
                    o += "free " + std::to_string(d.rank);
                } else if (d.module_form == "ideal") {
                    o += "ideal (" + joined(d.polys) + ")";
                } else {
                    o += "cokernel(" + std::to_string(d.rank);
                    for (std::size_t i = 0; i < d.rows.size(); ++i)
                        o += (i == 0 ? "; (" : ", (") + joined(d.rows[i]) + ")";
                    o += ")";
                }
                break;
            case Decl::Kind::Amalgam:
                o += "amalgam " + d.name + " = " + d.construction + "(";
                if (d.construction == "amalgam") {
                    o += d.refs[0] + ", " + d.refs[1] + ", " + d.refs[2] + ", " + d.refs[3];
                    o += "; gens = (" + joined(d.gens) + ")";
                    o += d.algebra_mode ? "; mode = algebra" : "; mode = module(" + d.refs[4] + ")";
                    if (d.nilpotent) o += "; nilpotent";
                    if (d.attested) o += "; attested";
                } else {
                    o += d.refs[0] + ", " + d.refs[1];
                }
                o += ")";
                break;
            case Decl::Kind::Family:
                o += "family " + d.name + " over " + d.refs[0] + " = " + d.family_form;
                if (d.family_form == "explicit") {
                    o += "(" + joined({d.refs.begin() + 1, d.refs.end()}) + ")";
                } else if (d.family_form == "monomial_sample") {
                    o += "(count = " + std::to_string(d.count) +
                         ", degree = " + std::to_string(d.degree_bound) +
                         ", gens = " + std::to_string(d.max_gens);
                    if (d.seed) o += ", seed = " + std::to_string(*d.seed);
                    o += ")";
                }
                break;
            case Decl::Kind::Check:
                o += "check " + d.name + " = " + d.op + "(" + joined(d.refs);
                if (!d.basis.empty()) o += "; basis = (" + joined(d.basis) + ")";
                o += ")";
                break;
        }
        o += ";\n";
    }
    for (const auto& [check, verdict] : f.expects) o += "expect " + check + " = " + verdict + ";\n";
    return o;
}

} // namespace amalgrade
