#pragma once

#include <map>
#include <string>
#include <vector>

#include "horocave/field.hpp"

namespace horocave {

/// A machine-checkable claim about a catalog field. `quantity` selects the
/// evaluation rule (see verify.cpp); `vec` carries spectrum-valued claims.
struct ExpectedClaim {
    std::string quantity;
    double value = 0.0;
    double tol = 1e-9;
    int k = 0;                // sigma_k index when relevant
    Eigen::VectorXd vec;      // expected sorted spectrum when relevant
    std::string note;         // which oracle pinned the value
};

/// Named closed-form conformal factor field with analytic jets and its list
/// of expected quantities.
struct CatalogEntry {
    std::string name;
    std::map<std::string, double> params;
    ConformalFactorField field;
    std::vector<ExpectedClaim> expected;
    /// Fields whose eigenvalues reach 1/2 immerse only after a dilation
    /// t > 0; immersion-level checks must route through dilate first.
    bool representable_after_dilation_only = false;
    /// Margin (radians) kept from the boundary when sampling this field.
    double sample_margin = 0.05;
};

/// Catalog constructor. Names and parameters:
///   constant            t (default 0), m (default 3), domain (0 sphere,
///                       1 hemisphere, 2 ball, 3 annulus; default 0), r
///   horosphere          s (default 0), m (default 3); based at the north pole
///   punctured           m, k with 1 <= k < m/2 (RangeError otherwise)
///   annulus             m (default 3), r (default 0.3)
///   rotational_example  none (m = 2)
/// Unknown names raise CatalogError.
CatalogEntry catalog_field(const std::string& name, std::map<std::string, double> params = {});

std::vector<std::string> catalog_names();

}  // namespace horocave
