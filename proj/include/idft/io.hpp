#pragma once

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "idft/dft.hpp"

namespace idft::io {

/// Input rejection with the 1-based row that caused it (0 = whole file).
struct parse_error : std::runtime_error {
    long row;
    parse_error(const std::string& message, long row_number)
        : std::runtime_error(row_number > 0 ? "row " + std::to_string(row_number) + ": " + message
                                            : message),
          row(row_number) {}
};

/// 17 significant digits: enough for exact double round-trips.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

inline bool parse_double(std::string_view token, double& out) {
    token = trim(token);
    if (token.empty()) return false;
    const char* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, out);
    return ec == std::errc{} && ptr == end;
}

inline bool starts_numeric(std::string_view s) {
    if (s.empty()) return false;
    const char c = s.front();
    return (c >= '0' && c <= '9') || c == '-' || c == '+' || c == '.';
}

} // namespace detail

/// Reads an interval signal: one sample per row, either "lo,hi" or a bare
/// "v" meaning the degenerate [v,v]. A leading non-numeric row is treated
/// as a header. Non-finite values and lo > hi are rejected; missing data
/// must be encoded by the caller as explicit wide bounds.
inline interval_vector read_signal(std::istream& in) {
    interval_vector out;
    std::string line;
    long row = 0;
    bool seen_data = false;
    while (std::getline(in, line)) {
        ++row;
        const std::string_view text = detail::trim(line);
        if (text.empty()) continue;
        if (!seen_data && !detail::starts_numeric(text)) continue; // header
        seen_data = true;

        const std::size_t comma = text.find(',');
        double lo = 0.0, hi = 0.0;
        if (comma == std::string_view::npos) {
            if (!detail::parse_double(text, lo)) throw parse_error("not a number", row);
            hi = lo;
        } else {
            if (text.find(',', comma + 1) != std::string_view::npos)
                throw parse_error("expected one or two columns", row);
            if (!detail::parse_double(text.substr(0, comma), lo) ||
                !detail::parse_double(text.substr(comma + 1), hi))
                throw parse_error("not a number", row);
        }
        if (!std::isfinite(lo) || !std::isfinite(hi))
            throw parse_error("non-finite bound; encode missing samples as wide intervals", row);
        if (lo > hi) throw parse_error("lo > hi", row);
        out.emplace_back(lo, hi);
    }
    if (out.empty()) throw parse_error("empty signal", 0);
    return out;
}

inline interval_vector read_signal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'", 0);
    return read_signal(in);
}

inline std::string config_string(const std::vector<endpoint_choice>& config) {
    std::string s;
    s.reserve(config.size());
    for (endpoint_choice c : config)
        s.push_back(c == endpoint_choice::lo ? 'l' : c == endpoint_choice::hi ? 'h' : 'a');
    return s;
}

enum class output_format { table, json, csv };

struct result_options {
    bool vertices = false;
    bool configs = false;
};

inline void write_csv(std::ostream& os, std::span<const spectrum_bounds> results,
                      const result_options& opts) {
    os << "h,re_lo,re_hi,im_lo,im_hi,amp_lo,amp_hi,phase_defined,phase_wrapped,phase_lo,phase_hi";
    if (opts.configs) os << ",config_max,config_min";
    if (opts.vertices) os << ",vertices";
    os << "\n";
    for (const spectrum_bounds& r : results) {
        os << r.harmonic << ',' << format_double(r.box.re.lo()) << ',' << format_double(r.box.re.hi())
           << ',' << format_double(r.box.im.lo()) << ',' << format_double(r.box.im.hi()) << ','
           << format_double(r.amplitude.lo()) << ',' << format_double(r.amplitude.hi()) << ','
           << (r.phase ? "true" : "false") << ',' << (r.phase && r.phase->wrapped ? "true" : "false");
        if (r.phase)
            os << ',' << format_double(r.phase->lo) << ',' << format_double(r.phase->hi);
        else
            os << ",,";
        if (opts.configs) {
            os << ',' << config_string(r.config_max) << ','
               << (r.config_min ? config_string(*r.config_min) : "interior");
        }
        if (opts.vertices) {
            os << ',';
            for (std::size_t i = 0; i < r.polygon.verts.size(); ++i) {
                if (i) os << ';';
                os << format_double(r.polygon.verts[i].real()) << ':'
                   << format_double(r.polygon.verts[i].imag());
            }
        }
        os << "\n";
    }
}

inline void write_json(std::ostream& os, std::span<const spectrum_bounds> results,
                       std::size_t signal_length, const result_options& opts) {
    os << "{\n  \"signal_length\": " << signal_length << ",\n  \"harmonics\": [";
    for (std::size_t i = 0; i < results.size(); ++i) {
        const spectrum_bounds& r = results[i];
        os << (i ? ",\n    {" : "\n    {");
        os << "\"h\": " << r.harmonic << ", \"re_lo\": " << format_double(r.box.re.lo())
           << ", \"re_hi\": " << format_double(r.box.re.hi())
           << ", \"im_lo\": " << format_double(r.box.im.lo())
           << ", \"im_hi\": " << format_double(r.box.im.hi())
           << ", \"amp_lo\": " << format_double(r.amplitude.lo())
           << ", \"amp_hi\": " << format_double(r.amplitude.hi())
           << ", \"phase_defined\": " << (r.phase ? "true" : "false")
           << ", \"phase_wrapped\": " << (r.phase && r.phase->wrapped ? "true" : "false");
        if (r.phase)
            os << ", \"phase_lo\": " << format_double(r.phase->lo)
               << ", \"phase_hi\": " << format_double(r.phase->hi);
        else
            os << ", \"phase_lo\": null, \"phase_hi\": null, \"phase_undefined_reason\": \""
               << (r.origin == origin_location::interior ? "origin_interior" : "origin_boundary")
               << '"';
        if (opts.configs) {
            os << ", \"config_max\": \"" << config_string(r.config_max) << "\", \"config_min\": \""
               << (r.config_min ? config_string(*r.config_min) : "interior") << '"';
        }
        if (opts.vertices) {
            os << ", \"vertices\": [";
            for (std::size_t v = 0; v < r.polygon.verts.size(); ++v) {
                if (v) os << ", ";
                os << '[' << format_double(r.polygon.verts[v].real()) << ", "
                   << format_double(r.polygon.verts[v].imag()) << ']';
            }
            os << ']';
        }
        os << '}';
    }
    os << "\n  ]\n}\n";
}

inline void write_table(std::ostream& os, std::span<const spectrum_bounds> results,
                        const result_options& opts) {
    for (const spectrum_bounds& r : results) {
        os << "h=" << r.harmonic << "\n  re    [" << format_double(r.box.re.lo()) << ", "
           << format_double(r.box.re.hi()) << "]\n  im    [" << format_double(r.box.im.lo())
           << ", " << format_double(r.box.im.hi()) << "]\n  amp   ["
           << format_double(r.amplitude.lo()) << ", " << format_double(r.amplitude.hi()) << "]\n";
        if (r.phase) {
            os << "  phase [" << format_double(r.phase->lo) << ", " << format_double(r.phase->hi)
               << ']' << (r.phase->wrapped ? " (wrapped)" : "") << "\n";
        } else {
            os << "  phase undefined ("
               << (r.origin == origin_location::interior ? "origin interior" : "origin on boundary")
               << ")\n";
        }
        if (opts.configs) {
            os << "  config max=" << config_string(r.config_max)
               << " min=" << (r.config_min ? config_string(*r.config_min) : "interior") << "\n";
        }
        if (opts.vertices) {
            os << "  vertices";
            for (const point& v : r.polygon.verts)
                os << ' ' << format_double(v.real()) << ':' << format_double(v.imag());
            os << "\n";
        }
    }
}

inline void write_results(std::ostream& os, std::span<const spectrum_bounds> results,
                          std::size_t signal_length, output_format format,
                          const result_options& opts) {
    switch (format) {
        case output_format::table: write_table(os, results, opts); break;
        case output_format::json: write_json(os, results, signal_length, opts); break;
        case output_format::csv: write_csv(os, results, opts); break;
    }
}

/// CCW vertex dump, one "x,y" per line from the canonical start vertex.
inline void write_polygon_csv(std::ostream& os, const convex_polygon& polygon) {
    for (const point& v : polygon.verts)
        os << format_double(v.real()) << ',' << format_double(v.imag()) << "\n";
}

} // namespace idft::io
