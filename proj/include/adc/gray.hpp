#pragma once

#include "adc/complex.hpp"

namespace adc {

inline constexpr const char* kTensorSeparator = "⊗";

/// Chain-level Gray tensor product: basis k⊗l, degrees add,
/// d(k⊗l) = dk⊗l + (-1)^{deg k} k⊗dl, aug multiplies.
Complex gray_tensor(const Complex& k, const Complex& l);

/// ((ΣC) ∨ □¹) ∪_{∂□¹} (□¹ ∨ (ΣC)).
///
/// Ids: the upper path ΣC ∨ □¹ carries prefix "t." and the lower path
/// □¹ ∨ ΣC prefix "b." on top of the wedge prefixes, so the corners are
/// t.l.o- (source), t.l.o+ (upper middle), b.l.+ (lower middle) and t.r.+
/// (target).
Complex funny_square1(const Complex& c);

} // namespace adc
