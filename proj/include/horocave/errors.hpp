#pragma once

#include <stdexcept>
#include <string>

namespace horocave {

// Every failure mode surfaces as a typed exception carrying a message that
// names the offending quantity. All types derive from Error so callers can
// catch the whole family at the CLI boundary.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionError : Error { using Error::Error; };
struct ModelError : Error { using Error::Error; };
struct NearIdealError : Error { using Error::Error; };
struct GeodesicError : Error { using Error::Error; };
struct TangentError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct StencilError : Error { using Error::Error; };
struct BoundaryError : Error { using Error::Error; };
struct RangeError : Error { using Error::Error; };
struct FieldError : Error { using Error::Error; };
struct ConeViolation : Error { using Error::Error; };
struct HorosphericalConcavityViolated : Error { using Error::Error; };
struct OffSurfaceError : Error { using Error::Error; };
struct PlacementError : Error { using Error::Error; };
struct AssumptionError : Error { using Error::Error; };
struct NoContactError : Error { using Error::Error; };
struct CatalogError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

}  // namespace horocave
