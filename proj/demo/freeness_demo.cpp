// Library walkthrough: precondition certificates, the ancestor closure, the
// scan bounds, and a full decision on a morphism whose fixed point does
// contain an abelian square.
#include <iostream>

#include <akp/akp.hpp>

int main() {
    using namespace akp;

    // mu(1) = 1123, mu(2) = 133, mu(3) = 223; the fixed point starts
    // 1123112313... and is abelian-cube-free.
    const Morphism dekking{3, {{1, 1, 2, 3}, {1, 3, 3}, {2, 2, 3}}};

    std::cout << "morphism:\n" << morphism_to_text(dekking);

    const FrequencyMatrix M = frequency_matrix(dekking);
    std::cout << "\ndet(M) = " << det(M).str() << "\n";
    std::cout << "|M^-1| < 1: " << (inverse_norm_lt_one(M) ? "yes" : "no")
              << " (estimate " << inverse_norm_estimate(M) << ")\n";

    const AncestorClosure closure = ancestors(dekking, 3);
    const std::int64_t d = delta(closure.all);
    std::cout << "\nancestors of the k=3 target template: " << closure.all.size() << "\n";
    std::cout << "largest diff norm (floored): " << d << "\n";
    std::cout << "scan bounds: derived " << length_bound(4, 3, 3, d) << ", paper "
              << paper_length_bound(4, 3, 3, d) << "\n";

    // A fixed point that is NOT abelian-square-free: mu(1) = 1121 starts the
    // fixed point with the square 11, and decide() finds it.
    const Morphism control{2, {{1, 1, 2, 1}, {2, 2, 1}}};
    const Verdict v = decide(control, 2);
    std::cout << "\ncontrol morphism, k = 2: " << to_string(v.status) << "\n";
    if (v.witness) {
        std::cout << "witness: position " << v.witness->position << ", block length "
                  << v.witness->block_length << "\n";
        const Word prefix = fixed_point_prefix(control, 16);
        std::cout << "fixed point starts " << format_word(prefix) << "\n";
    }
    return 0;
}
