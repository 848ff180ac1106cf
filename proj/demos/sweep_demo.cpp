// Small library tour: one residue, one closed form, one sweep.

#include <iostream>

#include "lacuna/report.hpp"

int main()
{
    using namespace lacuna;

    // H_{5,3}(4) = 1/2 modulo 25
    std::cout << "H_{5,3}(4) = " << harmonic_lacunary(ClassSpec(5, 3, 4), 5, 2).str() << '\n';

    // 10 T_{2,10}(5) from the Fibonacci closed form, against the direct sum
    const auto target = closed_target(ClosedFormId::m10_class0, 5);
    std::cout << "closed form " << closed_T_m10(0, 5).str() << ", direct "
              << to_string(binomial_lacunary(target.spec)) << '\n';

    // P_{p-(2/p)} / p for p = 13
    const auto q = padic_quotient(seq_exact(kPell, 14), 1L, 13, 1, 1);
    std::cout << "P_14 / 13 = " << (q ? q->str() : "not divisible") << '\n';

    const auto rep = run_suite(PrimeRange(5, 200), {3, 4, 5, 6}, {"t1", "t2", "t3", "t4"});
    std::cout << to_table(rep);
    return rep.failed() ? 1 : 0;
}
