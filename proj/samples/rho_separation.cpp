/*
   Copyright 2026 The lensclass Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Two 3-dimensional lens spaces with the same homotopy type that the
// rho-multisignature tells apart.

#include <iostream>

#include "lensclass/lensclass.hpp"

int main() {
    using namespace lensclass;
    const LensSpace a(7, {1, 1});
    const LensSpace b(7, {2, 1});
    std::cout << a.to_string() << " vs " << b.to_string() << '\n'
              << "  homotopy equivalent: " << std::boolalpha << homotopy_equivalent(a, b) << '\n'
              << "  homeomorphic:        " << homeomorphic(a, b) << '\n'
              << "  rho difference zero: " << rho_difference(a, b).is_zero << '\n';
    const RhoVector rho = rho_invariant(a);
    for (std::uint64_t j = 1; j < a.d(); ++j) std::cout << "  rho_" << j << " = " << rho.at(j).to_string() << '\n';
}
