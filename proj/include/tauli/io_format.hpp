#pragma once

#include <string>
#include <vector>

namespace tauli {

// 17-significant-digit rendering used by every machine-readable mode, so a
// value formats identically wherever it appears.
std::string format_g17(double v);

// CSV rows are plain comma joins: every emitted field is a number or a
// label with no comma/quote/newline, which keeps parse(render(x)) == x
// byte-for-byte.  csv_join throws on a field that would need quoting.
std::string csv_join(const std::vector<std::string>& fields);
std::vector<std::string> csv_split(const std::string& line);

// One JSON object per line.  Values arrive preformatted (format_g17 for
// numbers) so the emitted token is exactly the documented precision;
// `quoted` fields are escaped as JSON strings.
struct JsonField {
    std::string key;
    std::string value;
    bool quoted = false;
};
std::string json_line(const std::vector<JsonField>& fields);

}  // namespace tauli
