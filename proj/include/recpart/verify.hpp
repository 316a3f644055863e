#pragma once

#include <string>
#include <vector>

#include "recpart/closedform.hpp"
#include "recpart/oracle.hpp"

namespace recpart {

/// One three-way comparison: exhaustive oracle vs closed form vs series.
struct VerifyRecord {
    enum class Status { agree, documented_mismatch, mismatch };

    std::string stat;
    int n = 0;
    int k = -1;     // -1 for P_n aggregates
    int param = -1; // r or h where applicable, else -1
    Int oracle = 0;
    Int closedform = 0;
    Int series = 0;
    Status status = Status::agree;
};

struct VerifyReport {
    std::vector<VerifyRecord> records;

    size_t agreements() const;
    size_t documented_mismatches() const;
    size_t unexpected_mismatches() const;

    /// 0 when the only mismatches are the documented thm3ii/thm3iii ones.
    int exit_code() const { return unexpected_mismatches() == 0 ? 0 : 1; }
};

/// Runs every theorem statistic over 1 <= k <= n <= max_n plus the P_n
/// aggregates for 2 <= n <= max_n. stat_filter restricts to one formula
/// name ("thm1i" .. "thm3v"); empty means all. Cells are verified on a
/// worker pool; the report order is canonical regardless of thread count.
VerifyReport run_verify(int max_n, const NumberTables& tables,
                        const std::string& stat_filter = "", int threads = 1,
                        int cap = kDefaultOracleCap);

}  // namespace recpart
