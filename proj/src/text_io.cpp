#include "slicecert/text_io.hpp"

#include <cctype>
#include <vector>

namespace slicecert {

namespace {

class Scanner {
public:
    Scanner(const std::string& src, const Shape& shape) : src_(src), shape_(shape) {}

    std::vector<std::pair<Rational, Monomial>> run() {
        std::vector<std::pair<Rational, Monomial>> terms;
        skip_ws();
        if (eof()) fail("empty input");
        bool negate = false;
        if (peek() == '-' || peek() == '+') {
            negate = peek() == '-';
            advance();
        }
        while (true) {
            terms.push_back(term(negate));
            skip_ws();
            if (eof()) break;
            if (peek() == '+' || peek() == '-') {
                negate = peek() == '-';
                advance();
            } else {
                fail("expected '+', '-', or end of input");
            }
        }
        return terms;
    }

private:
    bool eof() const { return pos_ >= src_.size(); }
    char peek() const { return src_[pos_]; }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, col_, what); }

    void expect(char c) {
        skip_ws();
        if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
        advance();
    }

    std::string digits() {
        skip_ws();
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        std::string s;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            s.push_back(peek());
            advance();
        }
        return s;
    }

    long small_int(const char* what) {
        int at_line = line_, at_col = col_;
        std::string s = digits();
        if (s.size() > 12) throw ParseError(at_line, at_col, std::string(what) + " too large");
        return std::stol(s);
    }

    Rational coefficient() {
        std::string num = digits();
        skip_ws();
        if (!eof() && peek() == '/') {
            advance();
            int at_line = line_, at_col = col_;
            std::string den = digits();
            if (mpz_class(den) == 0) throw ParseError(at_line, at_col, "zero denominator");
            return Rational(mpz_class(num), mpz_class(den));
        }
        return Rational(mpz_class(num));
    }

    // x[i,j,...]^e
    Monomial::Entry power() {
        int at_line = line_, at_col = col_;
        advance();  // 'x'
        expect('[');
        VarIndex v;
        v.coord.push_back(small_int("variable index"));
        skip_ws();
        while (!eof() && peek() == ',') {
            advance();
            v.coord.push_back(small_int("variable index"));
            skip_ws();
        }
        expect(']');
        int id;
        try {
            id = shape_.var_id(v);
        } catch (const std::invalid_argument& e) {
            throw ParseError(at_line, at_col, e.what());
        }
        long e = 1;
        skip_ws();
        if (!eof() && peek() == '^') {
            advance();
            e = small_int("exponent");
        }
        return {id, e};
    }

    std::pair<Rational, Monomial> term(bool negate) {
        skip_ws();
        if (eof()) fail("expected a term");
        Rational c(1);
        std::vector<Monomial::Entry> entries;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            c = coefficient();
            skip_ws();
            if (!eof() && peek() == '*') {
                advance();
                skip_ws();
                if (eof() || peek() != 'x') fail("expected a variable after '*'");
                entries.push_back(power());
            }
        } else if (peek() == 'x') {
            entries.push_back(power());
        } else {
            fail("expected a coefficient or a variable");
        }
        skip_ws();
        while (!eof() && peek() == '*') {
            advance();
            skip_ws();
            if (eof() || peek() != 'x') fail("expected a variable after '*'");
            entries.push_back(power());
            skip_ws();
        }
        return {negate ? -c : c, Monomial::from_entries(shape_, std::move(entries))};
    }

    const std::string& src_;
    const Shape& shape_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

}  // namespace

PolyQ parse_poly(const std::string& src, const Shape& shape, const MonomialOrder& ord) {
    std::vector<PolyQ::Term> terms;
    for (auto& [c, m] : Scanner(src, shape).run()) terms.push_back({std::move(c), std::move(m)});
    return PolyQ::from_terms(shape, ord, std::move(terms));
}

PolyFp parse_poly_fp(const std::string& src, const Shape& shape, std::uint32_t p,
                     const MonomialOrder& ord) {
    std::vector<PolyFp::Term> terms;
    for (auto& [c, m] : Scanner(src, shape).run())
        terms.push_back({Fp::from_rational(c, p), std::move(m)});
    return PolyFp::from_terms(shape, ord, std::move(terms));
}

}  // namespace slicecert
