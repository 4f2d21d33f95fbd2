#include "slicecert/slice_family.hpp"

#include <sstream>
#include <stdexcept>

namespace slicecert {

namespace {

void check_direction(const Shape& shape, int i, int j) {
    if (i < 1 || i > shape.dims())
        throw std::invalid_argument("slice: direction out of range");
    if (j < 1 || j > shape.extent(i - 1))
        throw std::invalid_argument("slice: index out of range for direction");
}

long expected_generator_degree(const Shape& shape, int i) {
    long deg = 1;
    for (int k = 0; k < shape.dims(); ++k)
        if (k != i - 1) deg *= shape.extent(k);
    return deg;
}

// ascending lexicographic compositions of total into parts non-negative summands
void compositions(long total, int parts, std::vector<long>& prefix,
                  std::vector<std::vector<long>>& out) {
    if (parts == 1) {
        prefix.push_back(total);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (long first = 0; first <= total; ++first) {
        prefix.push_back(first);
        compositions(total - first, parts - 1, prefix, out);
        prefix.pop_back();
    }
}

Rational factorial_power(long w, long e) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(w));
    mpz_class fp;
    mpz_pow_ui(fp.get_mpz_t(), f.get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(fp);
}

}  // namespace

std::string Tableau::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) os << " | ";
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (j) os << ' ';
            os << rows[i][j];
        }
    }
    return os.str();
}

SliceIdeal::SliceIdeal(const Shape& shape, std::vector<PolyQ> binomials,
                       std::vector<PolyQ> monomials)
    : shape_(shape), binomials_(std::move(binomials)), monomials_(std::move(monomials)) {
    int expected_binomials = 0;
    for (int i = 1; i < shape_.dims(); ++i) expected_binomials += shape_.extent(i - 1) - 1;
    if (static_cast<int>(binomials_.size()) != expected_binomials ||
        static_cast<int>(monomials_.size()) != shape_.extent(shape_.dims() - 1))
        throw std::invalid_argument("SliceIdeal: generator count mismatch");
}

std::vector<PolyQ> SliceIdeal::generators() const {
    std::vector<PolyQ> g = binomials_;
    g.insert(g.end(), monomials_.begin(), monomials_.end());
    return g;
}

Monomial slice(const Shape& shape, int i, int j) {
    check_direction(shape, i, j);
    std::vector<Monomial::Entry> entries;
    int id = 0;
    shape.for_each_index([&](const VarIndex& v) {
        if (v.coord[i - 1] == j) entries.push_back({id, 1});
        ++id;
    });
    return Monomial::from_entries(shape, std::move(entries));
}

SliceIdeal build_ideal(const Shape& shape, const MonomialOrder& ord) {
    int d = shape.dims();
    std::vector<PolyQ> binomials;
    for (int i = 1; i <= d - 1; ++i) {
        Monomial first = slice(shape, i, 1);
        for (int j = 2; j <= shape.extent(i - 1); ++j) {
            PolyQ g = PolyQ::from_terms(
                shape, ord, {{Rational(1), first}, {Rational(-1), slice(shape, i, j)}});
            if (g.degree() != expected_generator_degree(shape, i))
                throw std::logic_error("build_ideal: binomial degree mismatch");
            binomials.push_back(std::move(g));
        }
    }
    std::vector<PolyQ> monomials;
    for (int j = 1; j <= shape.extent(d - 1); ++j) {
        PolyQ g = PolyQ::term(Rational(1), slice(shape, d, j), ord);
        if (g.degree() != expected_generator_degree(shape, d))
            throw std::logic_error("build_ideal: monomial degree mismatch");
        monomials.push_back(std::move(g));
    }
    return SliceIdeal(shape, std::move(binomials), std::move(monomials));
}

Monomial witness_monomial(const Shape& shape) {
    Monomial s = Monomial::one(shape);
    for (int i = 1; i <= shape.dims() - 1; ++i)
        for (int j = 2; j <= shape.extent(i - 1); ++j) s = mono_mul(s, slice(shape, i, j));
    return s;
}

Monomial line_monomial(const Shape& shape, const std::vector<int>& p) {
    int d = shape.dims();
    if (static_cast<int>(p.size()) != d - 1)
        throw std::invalid_argument("line_monomial: tuple must have d-1 entries");
    std::vector<Monomial::Entry> entries;
    VarIndex v(p);
    v.coord.push_back(0);
    for (int k = 1; k <= shape.extent(d - 1); ++k) {
        v.coord.back() = k;
        entries.push_back({shape.var_id(v), 1});
    }
    return Monomial::from_entries(shape, std::move(entries));
}

std::vector<std::vector<int>> all_lines(const Shape& shape) {
    int d = shape.dims();
    std::vector<std::vector<int>> lines;
    std::vector<int> p(d - 1, 1);
    while (true) {
        lines.push_back(p);
        int i = d - 2;
        while (i >= 0 && p[i] == shape.extent(i)) {
            p[i] = 1;
            --i;
        }
        if (i < 0) break;
        ++p[i];
    }
    return lines;
}

std::vector<Tableau> tableaux(const Shape& shape, const std::vector<long>& condition) {
    int d = shape.dims();
    if (static_cast<int>(condition.size()) != d - 1)
        throw std::invalid_argument("tableaux: condition must have d-1 entries");
    std::vector<std::vector<std::vector<long>>> row_choices(d - 1);
    for (int i = 0; i < d - 1; ++i) {
        if (condition[i] < 1) throw std::invalid_argument("tableaux: condition entries must be >= 1");
        std::vector<long> prefix;
        compositions(condition[i] - 1, shape.extent(i), prefix, row_choices[i]);
    }
    std::vector<Tableau> out;
    Tableau cur;
    cur.rows.resize(d - 1);
    std::function<void(int)> rec = [&](int i) {
        if (i == d - 1) {
            out.push_back(cur);
            return;
        }
        for (const auto& row : row_choices[i]) {
            cur.rows[i] = row;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

unsigned long tableau_count(const Shape& shape, const std::vector<long>& condition) {
    int d = shape.dims();
    if (static_cast<int>(condition.size()) != d - 1)
        throw std::invalid_argument("tableau_count: condition must have d-1 entries");
    mpz_class total(1);
    for (int i = 0; i < d - 1; ++i) {
        mpz_class c;
        mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(condition[i] - 1 + shape.extent(i) - 1),
                     static_cast<unsigned long>(shape.extent(i) - 1));
        total *= c;
    }
    if (!total.fits_ulong_p()) throw std::overflow_error("tableau_count: count too large");
    return total.get_ui();
}

long tableau_weight(const Tableau& A, const std::vector<int>& p) {
    if (p.size() != A.rows.size())
        throw std::invalid_argument("tableau_weight: tuple length mismatch");
    long w = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1 || p[i] > static_cast<int>(A.rows[i].size()))
            throw std::invalid_argument("tableau_weight: tuple entry out of range");
        w += A.rows[i][p[i] - 1];
    }
    return w;
}

PolyQ build_F_condition(const Shape& shape, const std::vector<long>& condition,
                        const MonomialOrder& ord) {
    long nd = shape.extent(shape.dims() - 1);
    std::vector<std::pair<std::vector<int>, Monomial>> lines;
    for (auto& p : all_lines(shape)) {
        Monomial l = line_monomial(shape, p);
        lines.push_back({std::move(p), std::move(l)});
    }
    std::vector<PolyQ::Term> terms;
    for (const auto& A : tableaux(shape, condition)) {
        Rational coeff(1);
        Monomial mono = Monomial::one(shape);
        for (const auto& [p, lp] : lines) {
            long w = tableau_weight(A, p);
            if (w == 0) continue;
            coeff = coeff / factorial_power(w, nd);
            mono = mono_mul(mono, mono_pow(lp, w));
        }
        terms.push_back({std::move(coeff), std::move(mono)});
    }
    return PolyQ::from_terms(shape, ord, std::move(terms));
}

PolyQ build_F(const Shape& shape, const MonomialOrder& ord) {
    std::vector<long> condition;
    for (int i = 0; i < shape.dims() - 1; ++i) condition.push_back(shape.extent(i));
    return build_F_condition(shape, condition, ord);
}

Tableau witness_tableau(const Shape& shape) {
    Tableau A;
    for (int i = 0; i < shape.dims() - 1; ++i) {
        std::vector<long> row(shape.extent(i), 1);
        row[0] = 0;
        A.rows.push_back(std::move(row));
    }
    return A;
}

Rational witness_alpha(const Shape& shape) {
    long nd = shape.extent(shape.dims() - 1);
    Tableau As = witness_tableau(shape);
    Rational alpha(1);
    for (const auto& p : all_lines(shape))
        alpha = alpha * factorial_power(tableau_weight(As, p), nd);
    return alpha;
}

long support_bound(long N, long r) {
    if (r < 1 || r > N) throw std::invalid_argument("support_bound: need 1 <= r <= N");
    return -r * r + r * (N + 1);
}

long support_bound_max(long N) {
    if (N < 1) throw std::invalid_argument("support_bound_max: need N >= 1");
    return (N + 1) * (N + 1) / 4;
}

}  // namespace slicecert
