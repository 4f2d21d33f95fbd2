#include "slicecert/resolution.hpp"

#include <gmpxx.h>

#include <sstream>

namespace slicecert {

std::string BettiTable::grid() const {
    long pd = projdim();
    long lo = 0, hi = 0;
    bool any = false;
    for (const auto& [ij, b] : entries) {
        if (b == 0) continue;
        long slope = ij.second - ij.first;
        if (!any) {
            lo = hi = slope;
            any = true;
        } else {
            lo = std::min(lo, slope);
            hi = std::max(hi, slope);
        }
    }
    if (!any) return "empty\n";

    std::vector<std::string> labels;
    labels.push_back("");
    labels.push_back("total:");
    for (long t = lo; t <= hi; ++t) labels.push_back(std::to_string(t) + ":");
    std::size_t label_w = 0;
    for (const auto& s : labels) label_w = std::max(label_w, s.size());

    auto cell = [&](long i, long t) -> std::string {
        long b = at(i, i + t);
        return b == 0 ? "." : std::to_string(b);
    };
    std::vector<std::size_t> col_w(static_cast<std::size_t>(pd) + 1, 1);
    for (long i = 0; i <= pd; ++i) {
        std::size_t w = std::to_string(i).size();
        w = std::max(w, std::to_string(total(i)).size());
        for (long t = lo; t <= hi; ++t) w = std::max(w, cell(i, t).size());
        col_w[static_cast<std::size_t>(i)] = w;
    }

    std::ostringstream out;
    auto emit = [&](const std::string& label, auto text) {
        out << std::string(label_w - label.size(), ' ') << label;
        for (long i = 0; i <= pd; ++i) {
            std::string s = text(i);
            out << ' ' << std::string(col_w[static_cast<std::size_t>(i)] - s.size(), ' ') << s;
        }
        out << '\n';
    };
    emit(labels[0], [](long i) { return std::to_string(i); });
    emit(labels[1], [&](long i) { return std::to_string(total(i)); });
    for (long t = lo; t <= hi; ++t)
        emit(std::to_string(t) + ":", [&](long i) { return cell(i, t); });
    return out.str();
}

long ab_projdim(const Shape& shape, const DepthZeroCertificate& cert) {
    if (cert.shape != shape)
        throw std::invalid_argument("ab_projdim: certificate is for a different shape");
    if (!cert.verdict)
        throw std::invalid_argument("ab_projdim: certificate did not pass");
    return shape.var_count();
}

unsigned long monomial_count(const Shape& shape, long degree) {
    if (degree < 0) return 0;
    // binom(degree + V - 1, V - 1)
    unsigned long v = static_cast<unsigned long>(shape.var_count());
    mpz_class n;
    mpz_bin_uiui(n.get_mpz_t(), static_cast<unsigned long>(degree) + v - 1, v - 1);
    if (!n.fits_ulong_p()) throw std::overflow_error("monomial_count: result does not fit");
    return n.get_ui();
}

std::vector<std::vector<long>> exponent_rows(int vars, long degree) {
    std::vector<std::vector<long>> out;
    std::vector<long> row(static_cast<std::size_t>(vars), 0);
    std::function<void(int, long)> rec = [&](int pos, long left) {
        if (pos == vars - 1) {
            row[static_cast<std::size_t>(pos)] = left;
            out.push_back(row);
            return;
        }
        for (long e = 0; e <= left; ++e) {
            row[static_cast<std::size_t>(pos)] = e;
            rec(pos + 1, left - e);
        }
    };
    if (vars == 0) {
        if (degree == 0) out.push_back({});
        return out;
    }
    rec(0, degree);
    return out;
}

}  // namespace slicecert
