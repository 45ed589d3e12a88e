#pragma once

// Mutation switches used to show that the checkers are not vacuous. Both are
// off unless a test or the CLI `--mutate` option turns them on.
namespace adc::debug {

bool flip_leibniz_sign();
void set_flip_leibniz_sign(bool on);

bool corrupt_pos_neg_parts();
void set_corrupt_pos_neg_parts(bool on);

/// Restores the previous mutation state on scope exit.
class MutationGuard {
public:
    MutationGuard(bool flip_sign, bool corrupt_parts);
    ~MutationGuard();
    MutationGuard(const MutationGuard&) = delete;
    MutationGuard& operator=(const MutationGuard&) = delete;

private:
    bool saved_flip_;
    bool saved_corrupt_;
};

} // namespace adc::debug
