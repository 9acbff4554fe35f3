#include <cctype>
#include <fstream>
#include <sstream>

#include "homtower/laurent.hpp"

namespace homtower {

namespace {

constexpr long kMaxExponent = 1000000;

struct Pos {
    int line;
    int col;
};

struct Statement {
    std::string text;
    std::vector<Pos> pos;  // position of each character
};

[[noreturn]] void fail(Pos p, const std::string& msg) {
    throw InputError("parse error at line " + std::to_string(p.line) + ", col " +
                     std::to_string(p.col) + ": " + msg);
}

std::vector<Statement> split_statements(const std::string& text) {
    std::vector<Statement> out;
    Statement cur;
    int line = 1, col = 1;
    bool comment = false;
    auto flush = [&]() {
        // drop leading/trailing blanks
        size_t a = 0, b = cur.text.size();
        while (a < b && std::isspace(static_cast<unsigned char>(cur.text[a]))) ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(cur.text[b - 1]))) --b;
        if (b > a) {
            Statement s;
            s.text = cur.text.substr(a, b - a);
            s.pos.assign(cur.pos.begin() + static_cast<long>(a),
                         cur.pos.begin() + static_cast<long>(b));
            out.push_back(std::move(s));
        }
        cur = Statement{};
    };
    for (char ch : text) {
        if (ch == '\n') {
            flush();
            comment = false;
            ++line;
            col = 1;
            continue;
        }
        if (ch == '#') comment = true;
        if (!comment) {
            if (ch == ';') {
                flush();
            } else {
                cur.text.push_back(ch);
                cur.pos.push_back(Pos{line, col});
            }
        }
        ++col;
    }
    flush();
    return out;
}

// Cursor over one statement.
struct Cursor {
    const Statement& s;
    size_t i = 0;

    bool done() const { return i >= s.text.size(); }
    char peek() const { return done() ? '\0' : s.text[i]; }
    Pos where() const {
        if (done())
            return s.pos.empty() ? Pos{0, 0} : Pos{s.pos.back().line, s.pos.back().col + 1};
        return s.pos[i];
    }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(s.text[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
};

mpz_class parse_mpz(Cursor& c) {
    c.skip_ws();
    Pos at = c.where();
    std::string digits;
    if (c.peek() == '+' || c.peek() == '-') {
        digits.push_back(c.peek());
        ++c.i;
    }
    if (!std::isdigit(static_cast<unsigned char>(c.peek())))
        fail(at, "expected an integer");
    while (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        digits.push_back(c.peek());
        ++c.i;
    }
    return mpz_class(digits);
}

long parse_exponent(Cursor& c) {
    Pos at = c.where();
    mpz_class v = parse_mpz(c);
    if (v > kMaxExponent || v < -kMaxExponent) fail(at, "exponent overflow");
    return v.get_si();
}

// Variable index for the statement grammar: x,y when n <= 2; x1..xn always.
int parse_var_index(Cursor& c, int n) {
    Pos at = c.where();
    char v = c.peek();
    ++c.i;
    if (v == 'y') {
        if (n != 2) fail(at, "variable y is only available when n=2");
        return 1;
    }
    if (v != 'x') fail(at, "expected a variable");
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        long idx = 0;
        while (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            idx = idx * 10 + (c.peek() - '0');
            ++c.i;
            if (idx > n) fail(at, "variable index exceeds rank n");
        }
        if (idx < 1) fail(at, "variable index must be >= 1");
        return static_cast<int>(idx - 1);
    }
    if (n > 2) fail(at, "bare x is ambiguous for n > 2; use x1..xn");
    return 0;
}

LaurentPoly parse_entry(const Statement& s, size_t from, size_t to, int n, long prime) {
    Statement sub;
    sub.text = s.text.substr(from, to - from);
    sub.pos.assign(s.pos.begin() + static_cast<long>(from),
                   s.pos.begin() + static_cast<long>(to));
    Cursor c{sub};
    LaurentPoly poly(n);

    c.skip_ws();
    if (c.done()) fail(c.where(), "empty relation entry");

    bool first = true;
    while (true) {
        c.skip_ws();
        if (c.done()) break;
        int sign = 1;
        if (c.peek() == '+' || c.peek() == '-') {
            if (c.peek() == '-') sign = -1;
            ++c.i;
        } else if (!first) {
            fail(c.where(), "expected '+' or '-' between terms");
        }
        first = false;

        // term: factor ('*' factor)*
        mpz_class coeff = sign;
        std::vector<int> exps(static_cast<size_t>(n), 0);
        bool any_factor = false;
        while (true) {
            c.skip_ws();
            Pos at = c.where();
            char ch = c.peek();
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                coeff *= parse_mpz(c);
                any_factor = true;
            } else if (ch == 'p' ) {
                ++c.i;
                coeff *= prime;
                any_factor = true;
            } else if (ch == 'x' || ch == 'y') {
                int idx = parse_var_index(c, n);
                long e = 1;
                if (c.eat('^')) e = parse_exponent(c);
                long acc = exps[static_cast<size_t>(idx)] + e;
                if (acc > kMaxExponent || acc < -kMaxExponent)
                    fail(at, "exponent overflow");
                exps[static_cast<size_t>(idx)] = static_cast<int>(acc);
                any_factor = true;
            } else {
                fail(at, std::string("unexpected symbol '") + ch + "'");
            }
            if (!c.eat('*')) break;
        }
        if (!any_factor) fail(c.where(), "empty term");
        poly.add_term(exps, coeff);
        c.skip_ws();
        if (c.done()) break;
        if (c.peek() != '+' && c.peek() != '-')
            fail(c.where(), std::string("unexpected symbol '") + c.peek() + "'");
    }
    return poly;
}

long parse_header_value(const Statement& s, size_t eq) {
    Statement sub;
    sub.text = s.text.substr(eq + 1);
    sub.pos.assign(s.pos.begin() + static_cast<long>(eq + 1), s.pos.end());
    Cursor c{sub};
    mpz_class v = parse_mpz(c);
    c.skip_ws();
    if (!c.done()) fail(c.where(), "trailing characters after header value");
    if (v < 0 || v > 1000000000) fail(s.pos[0], "header value out of range");
    return v.get_si();
}

}  // namespace

ModulePresentation parse_presentation(const std::string& text) {
    ModulePresentation pres;
    bool have_p = false, have_n = false, have_g = false;

    for (const Statement& st : split_statements(text)) {
        const std::string& t = st.text;
        size_t eq = t.find('=');
        size_t colon = t.find(':');
        bool is_rel = false;
        if (colon != std::string::npos) {
            std::string head = t.substr(0, colon);
            while (!head.empty() &&
                   std::isspace(static_cast<unsigned char>(head.back())))
                head.pop_back();
            is_rel = (head == "rel");
        }
        if (is_rel) {
            if (!(have_p && have_n && have_g))
                fail(st.pos[0], "rel before p=, n=, gens= headers");
            std::vector<LaurentPoly> row;
            size_t start = colon + 1;
            for (size_t i = start; i <= t.size(); ++i) {
                if (i == t.size() || t[i] == '|') {
                    row.push_back(parse_entry(st, start, i, pres.n, pres.p));
                    start = i + 1;
                }
            }
            if (static_cast<int>(row.size()) != pres.g)
                fail(st.pos[0], "relation row has " + std::to_string(row.size()) +
                                    " entries, expected gens=" +
                                    std::to_string(pres.g));
            pres.relations.push_back(std::move(row));
            continue;
        }
        if (eq == std::string::npos) fail(st.pos[0], "unrecognized statement");
        std::string key = t.substr(0, eq);
        while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back())))
            key.pop_back();
        long v = parse_header_value(st, eq);
        if (key == "p") {
            if (have_p) fail(st.pos[0], "duplicate p=");
            if (!is_prime(v)) fail(st.pos[0], "non-prime p = " + std::to_string(v));
            pres.p = v;
            have_p = true;
        } else if (key == "n") {
            if (have_n) fail(st.pos[0], "duplicate n=");
            if (v < 1 || v > 9) fail(st.pos[0], "rank n must be in [1, 9]");
            pres.n = static_cast<int>(v);
            have_n = true;
        } else if (key == "gens") {
            if (have_g) fail(st.pos[0], "duplicate gens=");
            if (v < 1 || v > 64) fail(st.pos[0], "gens must be in [1, 64]");
            pres.g = static_cast<int>(v);
            have_g = true;
        } else {
            fail(st.pos[0], "unknown header '" + key + "'");
        }
    }
    if (!(have_p && have_n && have_g))
        throw InputError("parse error: presentation must declare p=, n= and gens=");
    return pres;
}

ModulePresentation parse_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open presentation file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_presentation(ss.str());
}

}  // namespace homtower
