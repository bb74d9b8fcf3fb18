#include "gjcluster/series.hpp"

namespace gjc {

NcSeries eval_t(const NcPolySeries& s, const BigInt& t0) {
    NcSeries out(s.alphabet(), s.max_len());
    for (const auto& [w, p] : s.terms()) out.add_to(w, p.eval(t0));
    return out;
}

NcSeries one_minus_letters(const AlphabetPtr& alphabet, std::size_t max_len) {
    NcSeries s = NcSeries::constant(alphabet, max_len, BigInt(1));
    for (Letter a = 0; a < alphabet->size(); ++a)
        s.add_to(Word(alphabet, {a}), BigInt(-1));
    return s;
}

NcPolySeries one_minus_letters_poly(const AlphabetPtr& alphabet, std::size_t max_len) {
    NcPolySeries s = NcPolySeries::constant(alphabet, max_len, IntPoly(1));
    for (Letter a = 0; a < alphabet->size(); ++a)
        s.add_to(Word(alphabet, {a}), IntPoly(-1));
    return s;
}

NcPolySeries to_poly_series(const NcSeries& s) {
    NcPolySeries out(s.alphabet(), s.max_len());
    for (const auto& [w, c] : s.terms()) out.add_to(w, IntPoly(c));
    return out;
}

}  // namespace gjc
