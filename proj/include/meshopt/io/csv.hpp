#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "meshopt/core/types.hpp"
#include "meshopt/hydro/reservoir.hpp"
#include "meshopt/sim/report.hpp"

namespace meshopt::io {

// Shortest decimal form that parses back to exactly the same double.
inline std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline double parse_double(const std::string& s, const std::string& where) {
    double v = 0.0;
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    const auto res = std::from_chars(begin, end, v);
    if (res.ec != std::errc{} || res.ptr != end)
        throw std::runtime_error(where + ": not a number: '" + s + "'");
    return v;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

// Whole-file CSV reader: header row plus data rows.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

inline CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    CsvTable table;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        if (first) {
            table.header = std::move(fields);
            first = false;
        } else {
            table.rows.push_back(std::move(fields));
        }
    }
    if (first) throw std::runtime_error(path + ": empty file, header row required");
    return table;
}

// Solution front: objectives first, then the decision vector.
inline void write_front_csv(std::ostream& out, const std::vector<Solution>& front) {
    if (front.empty()) {
        out << "f1,f2\n";
        return;
    }
    out << "f1,f2";
    for (std::size_t i = 0; i < front[0].position.size(); ++i) out << ",x" << i;
    out << "\n";
    for (const auto& s : front) {
        out << format_double(s.objectives[0]) << "," << format_double(s.objectives[1]);
        for (double x : s.position) out << "," << format_double(x);
        out << "\n";
    }
}

inline void write_front_csv(const std::string& path, const std::vector<Solution>& front) {
    std::ofstream out(path);
    write_front_csv(out, front);
}

inline std::vector<Solution> parse_front_csv(const std::string& path) {
    const CsvTable table = read_csv(path);
    if (table.header.size() < 2 || table.header[0] != "f1" || table.header[1] != "f2")
        throw std::runtime_error(path + ": expected a front header f1,f2,x0,...");
    std::vector<Solution> front;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const std::string where = path + ": row " + std::to_string(r + 2);
        const auto& row = table.rows[r];
        if (row.size() != table.header.size())
            throw std::runtime_error(where + ": field count mismatch");
        Solution s;
        s.objectives = {parse_double(row[0], where), parse_double(row[1], where)};
        for (std::size_t i = 2; i < row.size(); ++i)
            s.position.push_back(parse_double(row[i], where));
        front.push_back(std::move(s));
    }
    return front;
}

// Dispatch report: the per-plant hourly columns plus a totals block.
inline void write_report_csv(std::ostream& out, const std::vector<sim::PlantReport>& plants) {
    out << "hour";
    for (std::size_t u = 1; u <= plants.size(); ++u)
        out << ",dr_u" << u << ",dp_u" << u << ",e_u" << u << ",uwd_u" << u << ",owd_u" << u
            << ",sw_u" << u;
    out << "\n";
    const std::size_t hours = plants.empty() ? 0 : plants[0].rows.size();
    for (std::size_t h = 0; h < hours; ++h) {
        out << plants[0].rows[h].hour;
        for (const auto& plant : plants) {
            const auto& row = plant.rows[h];
            out << "," << format_double(row.demand_required) << ","
                << format_double(row.demand_produced) << "," << format_double(row.error) << ","
                << format_double(row.usual_discharge) << ","
                << format_double(row.optimized_discharge) << ","
                << format_double(row.saved_water);
        }
        out << "\n";
    }
    out << "total_sw";
    for (const auto& plant : plants)
        out << ",,,,,," << format_double(plant.total_saved_water());
    out << "\n";
    out << "total_sw_liters";
    for (const auto& plant : plants)
        out << ",,,,,," << format_double(plant.total_saved_liters_per_day());
    out << "\n";
}

inline void write_report_csv(const std::string& path, const std::vector<sim::PlantReport>& plants) {
    std::ofstream out(path);
    write_report_csv(out, plants);
}

// Parses the hourly block back into per-plant rows (the totals block is
// recomputed from the rows on render, so it carries no extra state).
inline std::vector<sim::PlantReport> parse_report_csv(const std::string& path) {
    const CsvTable table = read_csv(path);
    if (table.header.empty() || table.header[0] != "hour" ||
        (table.header.size() - 1) % 6 != 0)
        throw std::runtime_error(path + ": expected a report header");
    const std::size_t n_plants = (table.header.size() - 1) / 6;
    std::vector<sim::PlantReport> plants(n_plants);
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        if (!row.empty() && row[0].rfind("total_", 0) == 0) continue;
        const std::string where = path + ": row " + std::to_string(r + 2);
        if (row.size() != table.header.size())
            throw std::runtime_error(where + ": field count mismatch");
        for (std::size_t u = 0; u < n_plants; ++u) {
            sim::HourlyReportRow parsed;
            parsed.hour = static_cast<int>(parse_double(row[0], where));
            const std::size_t base = 1 + 6 * u;
            parsed.demand_required = parse_double(row[base + 0], where);
            parsed.demand_produced = parse_double(row[base + 1], where);
            parsed.error = parse_double(row[base + 2], where);
            parsed.usual_discharge = parse_double(row[base + 3], where);
            parsed.optimized_discharge = parse_double(row[base + 4], where);
            parsed.saved_water = parse_double(row[base + 5], where);
            plants[u].rows.push_back(parsed);
        }
    }
    return plants;
}

// Hourly inflow/demand data: columns hour, qa_u1, dm_u1, qa_u2, dm_u2.
inline std::vector<std::vector<hydro::HourContext>> read_hourly_data(const std::string& path,
                                                                     double tolerance = 0.005) {
    const CsvTable table = read_csv(path);
    const std::vector<std::string> expected = {"hour", "qa_u1", "dm_u1", "qa_u2", "dm_u2"};
    if (table.header != expected)
        throw std::runtime_error(path + ": expected header hour,qa_u1,dm_u1,qa_u2,dm_u2");
    std::vector<std::vector<hydro::HourContext>> data;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        const std::string where = path + ": row " + std::to_string(r + 2);
        if (row.size() != 5)
            throw std::runtime_error(where + ": expected 5 fields, got " +
                                     std::to_string(row.size()));
        const double hour = parse_double(row[0], where);
        if (hour != static_cast<double>(r))
            throw std::runtime_error(where + ": expected hour " + std::to_string(r));
        hydro::HourContext c1{parse_double(row[1], where), parse_double(row[2], where),
                              tolerance, 0.0, 0.0};
        hydro::HourContext c2{parse_double(row[3], where), parse_double(row[4], where),
                              tolerance, 0.0, 0.0};
        if (c1.natural_inflow < 0 || c2.natural_inflow < 0 || c1.demand < 0 || c2.demand < 0)
            throw std::runtime_error(where + ": negative inflow or demand");
        data.push_back({c1, c2});
    }
    return data;
}

}  // namespace meshopt::io
