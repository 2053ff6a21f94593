#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "horocave/catalog.hpp"
#include "horocave/records.hpp"

namespace horocave {

struct VerifyOptions {
    bool inject_error = false;  // perturbs the lambda<->kappa map; harness sanity hook
    std::ostream* out = nullptr;
};

std::vector<std::string> verify_suites();

/// Runs one suite (or "all"), emitting one record per check. Returns 0 when
/// every record passes, 1 when any fails, 2 on an unknown suite name.
int run_verify(const std::string& suite, const VerifyOptions& opts, RecordSink* sink = nullptr);

/// Evaluates one expected claim of a catalog entry; appends records to sink.
/// use_fd reruns the claim through finite-difference jets at tolerance
/// max(tol, 1e-5).
void check_claim(const CatalogEntry& entry, const ExpectedClaim& claim, bool use_fd,
                 RecordSink& sink);

}  // namespace horocave
