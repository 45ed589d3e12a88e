#include "adc/debug.hpp"
#include "adc/error.hpp"

#include <atomic>

namespace adc {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::UnknownBasisElement: return "UnknownBasisElement";
    case ErrorKind::IdCollision: return "IdCollision";
    case ErrorKind::MissingBipointing: return "MissingBipointing";
    case ErrorKind::NotComposable: return "NotComposable";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::NotASubcomplex: return "NotASubcomplex";
    case ErrorKind::IncompatibleIdentification: return "IncompatibleIdentification";
    case ErrorKind::NotParallel: return "NotParallel";
    case ErrorKind::StaleId: return "StaleId";
    case ErrorKind::InvalidChainMap: return "InvalidChainMap";
    case ErrorKind::NotUnital: return "NotUnital";
    case ErrorKind::InvalidCell: return "InvalidCell";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
    }
    return "Error";
}

namespace debug {

namespace {
std::atomic<bool> g_flip_sign{false};
std::atomic<bool> g_corrupt_parts{false};
} // namespace

bool flip_leibniz_sign() { return g_flip_sign.load(std::memory_order_relaxed); }
void set_flip_leibniz_sign(bool on) { g_flip_sign.store(on, std::memory_order_relaxed); }

bool corrupt_pos_neg_parts() { return g_corrupt_parts.load(std::memory_order_relaxed); }
void set_corrupt_pos_neg_parts(bool on) { g_corrupt_parts.store(on, std::memory_order_relaxed); }

MutationGuard::MutationGuard(bool flip_sign, bool corrupt_parts)
    : saved_flip_(flip_leibniz_sign()), saved_corrupt_(corrupt_pos_neg_parts())
{
    set_flip_leibniz_sign(flip_sign);
    set_corrupt_pos_neg_parts(corrupt_parts);
}

MutationGuard::~MutationGuard()
{
    set_flip_leibniz_sign(saved_flip_);
    set_corrupt_pos_neg_parts(saved_corrupt_);
}

} // namespace debug
} // namespace adc
