// Acceptance gate: runs every acceptance criterion and prints one PASS/FAIL
// line per criterion.  Exit status is the number of failing criteria.

#include <iostream>

#include <flagreg/acceptance.hpp>

int main()
{
    const int failures = flagreg::run_acceptance(std::cout);
    if (failures == 0)
        std::cout << "acceptance: all criteria passed\n";
    else
        std::cout << "acceptance: " << failures << " criteria FAILED\n";
    return failures;
}
