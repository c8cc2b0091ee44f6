#pragma once

#include <string>
#include <vector>

#include "fanobig/models.hpp"

namespace fanobig::test {

/// A class with integer constant coefficients, in basis order.
inline DivisorClass constant_class(const Basis& basis, std::vector<long> coeffs) {
    std::vector<ParamLin> lifted;
    lifted.reserve(coeffs.size());
    for (long c : coeffs) lifted.emplace_back(c);
    return DivisorClass(basis, std::move(lifted));
}

/// The model's named effective generator (throws when absent).
inline const DivisorClass& generator(const FanoModel& model, const std::string& name) {
    for (const EffectiveGenerator& gen : model.effective_generators)
        if (gen.name == name) return gen.cls;
    throw Error("test: model " + model.key() + " has no generator '" + name + "'");
}

}  // namespace fanobig::test
