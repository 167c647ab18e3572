#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace symcube {

// Outcome of a structural check. An empty violation list means the check
// passed; otherwise each entry names one violated condition.
struct Report {
    std::vector<std::string> violations;
    bool truncated = false;  // more violations existed than were recorded

    bool ok() const { return violations.empty(); }
    explicit operator bool() const { return ok(); }

    std::string joined(const std::string& sep = "; ") const {
        std::string out;
        for (const auto& v : violations) {
            if (!out.empty()) out += sep;
            out += v;
        }
        if (truncated) out += sep + "...";
        return out;
    }
};

// Collector with an optional cap so verifiers stay bounded on garbage input.
class ReportBuilder {
  public:
    explicit ReportBuilder(std::size_t cap = std::numeric_limits<std::size_t>::max())
        : cap_(cap) {}

    void add(std::string violation) {
        if (report_.violations.size() < cap_) {
            report_.violations.push_back(std::move(violation));
        } else {
            report_.truncated = true;
        }
    }

    // Merges another report in order, respecting the cap.
    void merge(const Report& other) {
        for (const auto& v : other.violations) add(v);
        if (other.truncated) report_.truncated = true;
    }

    bool full() const { return report_.violations.size() >= cap_; }
    bool clean() const { return report_.ok() && !report_.truncated; }

    Report take() { return std::move(report_); }

  private:
    std::size_t cap_;
    Report report_;
};

}  // namespace symcube
