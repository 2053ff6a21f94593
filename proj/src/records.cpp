#include "horocave/records.hpp"

#include <cmath>
#include <cstdio>

namespace horocave {

namespace {

std::string escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string num17(double v) {
    char buf[40];
    if (std::isnan(v)) return "null";
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string format_record(const Record& r) {
    std::string s = "{\"check\":\"" + escape(r.check) + "\",\"field\":\"" + escape(r.field)
                    + "\",\"point\":\"" + escape(r.point) + "\",\"expected\":" + num17(r.expected)
                    + ",\"actual\":" + num17(r.actual) + ",\"tol\":" + num17(r.tol)
                    + ",\"pass\":" + (r.pass ? "true" : "false") + "}";
    return s;
}

void RecordSink::emit(Record r) {
    if (!r.pass) ++failures_;
    if (out_) (*out_) << format_record(r) << "\n";
    records_.push_back(std::move(r));
}

void RecordSink::check(const std::string& check, const std::string& field,
                       const std::string& point, double expected, double actual, double tol) {
    Record r{check, field, point, expected, actual, tol,
             std::isfinite(actual) && std::abs(actual - expected) <= tol};
    emit(std::move(r));
}

void RecordSink::check_flag(const std::string& check, const std::string& field,
                            const std::string& point, bool expected, bool actual) {
    Record r{check, field, point, expected ? 1.0 : 0.0, actual ? 1.0 : 0.0, 0.0,
             expected == actual};
    emit(std::move(r));
}

}  // namespace horocave
