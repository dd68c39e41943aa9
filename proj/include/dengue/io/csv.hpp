#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <ostream>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

#include "dengue/moea/types.hpp"
#include "dengue/sim/simulate.hpp"

namespace dengue::io {

/// Shortest decimal representation that round-trips the double exactly.
inline std::string format_double(double v)
{
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline double parse_double(const std::string& s)
{
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    while (first != last && (*first == ' ' || *first == '\t')) {
        ++first;
    }
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{}) {
        throw std::runtime_error("could not parse number: '" + s + "'");
    }
    return v;
}

inline std::vector<std::string> split_csv_line(const std::string& line)
{
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) {
        out.push_back(field);
    }
    return out;
}

inline std::ofstream open_for_write(const std::string& path)
{
    std::ofstream f(path, std::ios::binary);  // LF line endings everywhere
    if (!f) {
        throw std::runtime_error("cannot open for writing: " + path);
    }
    return f;
}

/// Front CSV (`f1,f2`, ascending f1) with an optional sidecar of decision
/// vectors in matching row order.
inline void write_front_csv(const std::string& front_path, const std::string& sidecar_path,
                            std::vector<moea::Solution> front)
{
    std::stable_sort(front.begin(), front.end(),
                     [](const moea::Solution& a, const moea::Solution& b) {
                         return a.f < b.f;
                     });
    auto ff = open_for_write(front_path);
    ff << "f1,f2\n";
    for (const auto& s : front) {
        ff << format_double(s.f[0]) << ',' << format_double(s.f[1]) << '\n';
    }
    if (sidecar_path.empty()) {
        return;
    }
    auto fx = open_for_write(sidecar_path);
    if (!front.empty()) {
        for (std::size_t d = 0; d < front[0].x.size(); ++d) {
            fx << (d ? "," : "") << "x_" << d;
        }
        fx << '\n';
        for (const auto& s : front) {
            for (std::size_t d = 0; d < s.x.size(); ++d) {
                fx << (d ? "," : "") << format_double(s.x[d]);
            }
            fx << '\n';
        }
    }
}

inline std::vector<moea::Solution> read_front_csv(const std::string& front_path,
                                                  const std::string& sidecar_path)
{
    std::ifstream ff(front_path);
    if (!ff) {
        throw std::runtime_error("cannot open front file: " + front_path);
    }
    std::vector<moea::Solution> out;
    std::string line;
    std::getline(ff, line);  // header
    while (std::getline(ff, line)) {
        if (line.empty()) {
            continue;
        }
        const auto fields = split_csv_line(line);
        if (fields.size() != 2) {
            throw std::runtime_error("malformed front row: " + line);
        }
        moea::Solution s;
        s.f = {parse_double(fields[0]), parse_double(fields[1])};
        out.push_back(std::move(s));
    }
    if (sidecar_path.empty()) {
        return out;
    }
    std::ifstream fx(sidecar_path);
    if (!fx) {
        throw std::runtime_error("cannot open decision sidecar: " + sidecar_path);
    }
    std::getline(fx, line);  // header
    for (auto& s : out) {
        if (!std::getline(fx, line)) {
            throw std::runtime_error("decision sidecar shorter than front file");
        }
        for (const auto& field : split_csv_line(line)) {
            s.x.push_back(parse_double(field));
        }
    }
    return out;
}

/// Trajectory CSV: one row per grid node, full round-trip precision.
inline void write_trajectory_csv(std::ostream& os, const sim::Trajectory& traj,
                                 const sim::ControlSignal& control)
{
    os << "t,s_h,e_h,i_h,r_h,a_m,s_m,e_m,i_m,c\n";
    for (std::size_t i = 0; i < traj.states.size(); ++i) {
        const auto& y = traj.states[i];
        os << format_double(traj.times[i]);
        for (double v : y.to_array()) {
            os << ',' << format_double(v);
        }
        os << ',' << format_double(control.values[i]) << '\n';
    }
}

inline void write_generation_log_csv(const std::string& path, const moea::GenerationLog& log)
{
    auto f = open_for_write(path);
    f << "gen,funEval,pop_size,n_leaders,hv\n";
    for (const auto& r : log.rows) {
        f << r.gen << ',' << r.fun_eval << ',' << r.pop_size << ',' << r.n_leaders << ','
          << format_double(r.hv) << '\n';
    }
}

}  // namespace dengue::io
