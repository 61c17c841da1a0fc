#ifndef FIBFIELD_REPORT_IO_HPP
#define FIBFIELD_REPORT_IO_HPP

#include <string>
#include <string_view>

#include "fibfield/fibgen.hpp"
#include "fibfield/moments.hpp"

namespace fibfield {

/// One JSON object per hit,
///   {"p":3,"n":45,"degree":44,"factorization":[[3,2],[5,1]],
///    "palindromic":true,"trivial":false,"family":"5*3^l","flagged":false}
/// followed by a {"summary":{...}} line carrying p, n_max and counts.
std::string scan_report_to_jsonl(const ScanReport& report);

/// Inverse of scan_report_to_jsonl. Throws std::invalid_argument on
/// malformed input or a missing summary line.
ScanReport scan_report_from_jsonl(std::string_view text);

/// Element rendered as its F_p value when it lies in the prime subfield
/// (code < p), as the quoted coefficient tuple otherwise.
std::string render_value(const FqElem& a);

/// "# q=3 p=3 e=1 case=THREE_MOD4_ODD_E period=8", then
/// "n,d_recur,d_oracle,agree" and one row per n in 1..period.
std::string moment_series_to_csv(const MomentSeries& series);

/// Oracle table and every identity result, one JSON object per line.
std::string even_q_report_to_jsonl(const EvenQReport& report);

}  // namespace fibfield

#endif  // FIBFIELD_REPORT_IO_HPP
