#pragma once

#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

// Unit-suffixed numeric parsing for the CLI. Internal units are strict SI;
// accepted suffixes mirror the mixed units common in link budgets
// (km/h, GHz, dB, kbps, us). Unknown suffixes are rejected.
namespace hyperlink::cli {

struct UnitSuffix {
    const char* suffix;
    double factor;
};

inline double parse_with_units(std::string_view text, const UnitSuffix* table, std::size_t n,
                               const char* what) {
    std::size_t split = text.size();
    while (split > 0) {
        const char c = text[split - 1];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') break;
        // keep scientific-notation exponents attached to the number
        if ((c == '+' || c == '-') && split >= 2 &&
            (text[split - 2] == 'e' || text[split - 2] == 'E'))
            break;
        --split;
    }
    std::string_view num = text.substr(0, split);
    std::string_view suffix = text.substr(split);
    // an "e"/"E" left dangling before the suffix belongs to the suffix check
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
    if (ec != std::errc{} || ptr != num.data() + num.size() || num.empty())
        throw std::invalid_argument(std::string("cannot parse ") + what + ": '" +
                                    std::string(text) + "'");
    if (suffix.empty()) {
        // bare number: first table entry with empty suffix is the default
        for (std::size_t i = 0; i < n; ++i)
            if (std::string_view(table[i].suffix).empty()) return value * table[i].factor;
        throw std::invalid_argument(std::string(what) + " requires a unit suffix: '" +
                                    std::string(text) + "'");
    }
    for (std::size_t i = 0; i < n; ++i)
        if (suffix == table[i].suffix) return value * table[i].factor;
    throw std::invalid_argument(std::string("unknown ") + what + " unit: '" +
                                std::string(suffix) + "'");
}

/// "1200km/h" -> 333.33 m/s; "333m/s"; bare numbers are m/s.
inline double parse_speed(std::string_view text) {
    static constexpr UnitSuffix table[] = {
        {"km/h", 1.0 / 3.6}, {"kmh", 1.0 / 3.6}, {"m/s", 1.0}, {"mps", 1.0}, {"", 1.0}};
    const double v = parse_with_units(text, table, std::size(table), "speed");
    if (v < 0.0) throw std::invalid_argument("speed must be >= 0");
    return v;
}

/// "5GHz", "4.8GHz", "900MHz"; bare numbers are Hz.
inline double parse_frequency(std::string_view text) {
    static constexpr UnitSuffix table[] = {
        {"GHz", 1e9}, {"MHz", 1e6}, {"kHz", 1e3}, {"Hz", 1.0}, {"", 1.0}};
    return parse_with_units(text, table, std::size(table), "frequency");
}

/// "50dB" -> 1e5 (power ratio 10^(x/10)); bare numbers are linear.
inline double parse_snr(std::string_view text) {
    static constexpr UnitSuffix table[] = {{"dB", 1.0}, {"db", 1.0}, {"", 0.0}};
    if (text.ends_with("dB") || text.ends_with("db")) {
        const double db = parse_with_units(text, table, 2, "snr");
        return std::pow(10.0, db / 10.0);
    }
    static constexpr UnitSuffix linear[] = {{"", 1.0}};
    return parse_with_units(text, linear, 1, "snr");
}

/// "48kbps", "100Mbps"; bare numbers are bps.
inline double parse_rate(std::string_view text) {
    static constexpr UnitSuffix table[] = {
        {"Gbps", 1e9}, {"Mbps", 1e6}, {"kbps", 1e3}, {"bps", 1.0}, {"", 1.0}};
    return parse_with_units(text, table, std::size(table), "rate");
}

/// "1W", "10mW"; bare numbers are watts.
inline double parse_power(std::string_view text) {
    static constexpr UnitSuffix table[] = {
        {"uW", 1e-6}, {"mW", 1e-3}, {"W", 1.0}, {"", 1.0}};
    return parse_with_units(text, table, std::size(table), "power");
}

/// "1us", "62.5ns", "0.25us"; bare numbers are seconds.
inline double parse_duration(std::string_view text) {
    static constexpr UnitSuffix table[] = {
        {"ns", 1e-9}, {"us", 1e-6}, {"ms", 1e-3}, {"s", 1.0}, {"", 1.0}};
    return parse_with_units(text, table, std::size(table), "duration");
}

}  // namespace hyperlink::cli
