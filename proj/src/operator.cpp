// SPDX-License-Identifier: Apache-2.0
#include "ctxlogic/operator.hpp"

#include <algorithm>
#include <map>

namespace ctxlogic {

Operator Operator::from_spectrum(std::vector<EigenPair> spectrum) {
    if (spectrum.empty()) throw InvalidInputError("operator needs a nonempty spectrum");
    std::sort(spectrum.begin(), spectrum.end(),
              [](const EigenPair& a, const EigenPair& b) { return a.value < b.value; });
    std::vector<Projector> ps;
    ps.reserve(spectrum.size());
    for (std::size_t k = 0; k < spectrum.size(); ++k) {
        if (k > 0 && spectrum[k].value == spectrum[k - 1].value) {
            throw InvalidInputError("operator spectrum has a repeated eigenvalue " +
                                    spectrum[k].value.to_string());
        }
        if (spectrum[k].projector.is_zero()) {
            throw InvalidInputError("operator spectrum has a zero projector");
        }
        ps.push_back(spectrum[k].projector);
    }
    for (std::size_t a = 0; a < ps.size(); ++a) {
        for (std::size_t b = a + 1; b < ps.size(); ++b) {
            if (!are_orthogonal(ps[a], ps[b])) {
                throw InvalidInputError("operator spectral projectors are not orthogonal");
            }
        }
    }
    if (!sum_is_identity(ps)) {
        throw InvalidInputError("operator spectral projectors do not sum to the identity");
    }
    return Operator(std::move(spectrum));
}

Operator apply_function(const Operator& a,
                        const std::function<Rational(const Rational&)>& f) {
    std::map<Rational, std::vector<Projector>> grouped;
    for (const auto& [value, projector] : a.spectrum()) {
        grouped[f(value)].push_back(projector);
    }
    std::vector<Operator::EigenPair> out;
    out.reserve(grouped.size());
    for (auto& [image, projectors] : grouped) {
        out.push_back({image, sum_projectors(projectors)});
    }
    return Operator::from_spectrum(std::move(out));
}

} // namespace ctxlogic
