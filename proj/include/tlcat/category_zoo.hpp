#ifndef TLCAT_CATEGORY_ZOO_HPP
#define TLCAT_CATEGORY_ZOO_HPP

#include "tlcat/monoidal_system.hpp"

namespace tlcat {

enum class CategoryKind { su2_generic, su2_level_k, fibonacci, ising };

struct CategorySpec {
    CategoryKind kind = CategoryKind::fibonacci;
    cplx q{1.0};          // su2_generic only
    int max_label = 4;    // su2_generic truncation window
    int level = 2;        // su2_level_k; q is then fixed to exp(i pi/(k+2))
    double tolerance = 1e-10;
};

/// su2 labels are integers (twice the spin): generic q with labels
/// 0..max_label, or the level-k quotient with labels 0..k and
/// q = exp(i pi/(k+2)). F-symbols are q-deformed 6j recoupling
/// coefficients; the pentagon checker is the oracle for the table.
MonoidalSystem build_su2(const CategorySpec& spec);

MonoidalSystem build_fibonacci();

MonoidalSystem build_ising();

MonoidalSystem build_category(const CategorySpec& spec);

const char* kind_name(CategoryKind k);

}  // namespace tlcat

#endif
