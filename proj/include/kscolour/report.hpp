#pragma once

#include <cstdint>
#include <iomanip>
#include <locale>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kscolour/area.hpp"
#include "kscolour/montecarlo.hpp"
#include "kscolour/version.hpp"

namespace kscolour {

inline constexpr std::string_view kScanCsvHeader = "N,white_fraction,black_fraction,total_fraction";

/// 12 significant digits in %g style, in the classic locale so output does
/// not depend on the environment.
inline std::string format_sig12(double x)
{
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::setprecision(12) << x;
    return os.str();
}

/// Scan table as CSV: header line then one row per N, LF line endings.
inline std::string scan_csv(const std::vector<AreaBreakdown>& rows)
{
    std::string out(kScanCsvHeader);
    out += '\n';
    for (const auto& r : rows) {
        out += std::to_string(r.dim);
        out += ',';
        out += format_sig12(r.white_fraction);
        out += ',';
        out += format_sig12(r.black_fraction);
        out += ',';
        out += format_sig12(r.total_fraction);
        out += '\n';
    }
    return out;
}

/// Provenance for one CLI invocation.
struct RunManifest {
    std::string command_line;
    std::optional<std::uint64_t> seed;
    double abs_tol = 0.0;
    double rel_tol = 0.0;
    std::string tool_version{kVersion};
    std::string generator{kGeneratorId};
    double wall_time_seconds = 0.0;

    [[nodiscard]] nlohmann::ordered_json to_json() const
    {
        nlohmann::ordered_json j;
        j["command_line"] = command_line;
        if (seed)
            j["seed"] = *seed;
        else
            j["seed"] = nullptr;
        j["tolerances"] = {{"abs_tol", abs_tol}, {"rel_tol", rel_tol}};
        j["tool_version"] = tool_version;
        j["generator"] = generator;
        j["wall_time_seconds"] = wall_time_seconds;
        return j;
    }
};

} // namespace kscolour
