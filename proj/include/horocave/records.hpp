#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace horocave {

/// One verification record. Serialized as a single JSON object per line with
/// exactly the keys check, field, point, expected, actual, tol, pass; numbers
/// carry 17 significant digits so doubles round-trip.
struct Record {
    std::string check;
    std::string field;
    std::string point;
    double expected = 0.0;
    double actual = 0.0;
    double tol = 0.0;
    bool pass = false;
};

std::string format_record(const Record& r);

/// Collects records and mirrors them to a stream in emission order.
class RecordSink {
  public:
    explicit RecordSink(std::ostream* out = nullptr) : out_(out) {}

    void emit(Record r);
    /// Convenience: |actual - expected| <= tol decides pass.
    void check(const std::string& check, const std::string& field, const std::string& point,
               double expected, double actual, double tol);
    /// Boolean claim: actual is 1 or 0, pass iff actual matches expected.
    void check_flag(const std::string& check, const std::string& field, const std::string& point,
                    bool expected, bool actual);

    int failures() const { return failures_; }
    std::size_t count() const { return records_.size(); }
    const std::vector<Record>& records() const { return records_; }

  private:
    std::ostream* out_;
    std::vector<Record> records_;
    int failures_ = 0;
};

}  // namespace horocave
