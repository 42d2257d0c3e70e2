#include "fleetcap/panel.hpp"
#include "fleetcap/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace fleetcap {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_double(const std::string& text, const char* field, int line_no) {
    const char* first = text.data();
    const char* last = first + text.size();
    double value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
        std::ostringstream msg;
        msg << "line " << line_no << ": field '" << field << "' is not a number: '" << text << "'";
        throw DataError(msg.str());
    }
    return value;
}

int parse_year(const std::string& text, int line_no) {
    double v = parse_double(text, "year", line_no);
    int y = static_cast<int>(v);
    if (v != y) {
        std::ostringstream msg;
        msg << "line " << line_no << ": year must be an integer, got '" << text << "'";
        throw DataError(msg.str());
    }
    return y;
}

void require_nonnegative(double v, const char* field, int line_no) {
    if (v < 0) {
        std::ostringstream msg;
        msg << "line " << line_no << ": field '" << field << "' must be non-negative, got " << v;
        throw DataError(msg.str());
    }
}

} // namespace

const FleetRecord* YearPanel::find(std::string_view province) const {
    for (const auto& r : records)
        if (r.province == province) return &r;
    return nullptr;
}

const NationalRow* NationalSeries::find(int year) const {
    for (const auto& r : rows)
        if (r.year == year) return &r;
    return nullptr;
}

std::string format_number(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

std::vector<YearPanel> load_panel(std::istream& in) {
    std::string line;
    int line_no = 0;
    std::map<int, YearPanel> by_year;
    std::set<std::pair<std::string, int>> seen;
    bool header_checked = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        auto fields = split_csv_line(line);
        if (!header_checked) {
            header_checked = true;
            if (!fields.empty() && fields[0] == "province") continue; // header row
        }
        if (fields.size() != 7) {
            std::ostringstream msg;
            msg << "line " << line_no << ": expected 7 fields, got " << fields.size();
            throw DataError(msg.str());
        }
        FleetRecord rec;
        rec.province = fields[0];
        if (rec.province.empty()) {
            std::ostringstream msg;
            msg << "line " << line_no << ": empty province identifier";
            throw DataError(msg.str());
        }
        rec.year = parse_year(fields[1], line_no);
        rec.vessels = parse_double(fields[2], "vessels", line_no);
        rec.tonnage = parse_double(fields[3], "tonnage", line_no);
        rec.power = parse_double(fields[4], "power", line_no);
        rec.labor = parse_double(fields[5], "labor", line_no);
        rec.catch_t = parse_double(fields[6], "catch", line_no);
        require_nonnegative(rec.vessels, "vessels", line_no);
        require_nonnegative(rec.tonnage, "tonnage", line_no);
        require_nonnegative(rec.power, "power", line_no);
        require_nonnegative(rec.labor, "labor", line_no);
        require_nonnegative(rec.catch_t, "catch", line_no);
        if (rec.catch_t > 0 && rec.vessels == 0 && rec.tonnage == 0 && rec.power == 0 && rec.labor == 0) {
            std::ostringstream msg;
            msg << "line " << line_no << ": positive catch with all inputs zero (" << rec.province << ")";
            throw DataError(msg.str());
        }
        if (!seen.insert({rec.province, rec.year}).second) {
            std::ostringstream msg;
            msg << "line " << line_no << ": duplicate record for (" << rec.province << ", " << rec.year << ")";
            throw DataError(msg.str());
        }
        auto& panel = by_year[rec.year];
        panel.year = rec.year;
        panel.records.push_back(std::move(rec));
    }

    std::vector<YearPanel> panels;
    panels.reserve(by_year.size());
    for (auto& [year, panel] : by_year) {
        std::sort(panel.records.begin(), panel.records.end(),
                  [](const FleetRecord& a, const FleetRecord& b) { return a.province < b.province; });
        panels.push_back(std::move(panel));
    }
    return panels;
}

void write_panel(std::ostream& out, std::span<const YearPanel> panels) {
    out << "province,year,vessels,tonnage,power,labor,catch\n";
    for (const auto& panel : panels) {
        for (const auto& r : panel.records) {
            out << r.province << ',' << r.year << ',' << format_number(r.vessels) << ','
                << format_number(r.tonnage) << ',' << format_number(r.power) << ','
                << format_number(r.labor) << ',' << format_number(r.catch_t) << '\n';
        }
    }
}

NationalSeries derive_national_series(std::span<const NationalInput> inputs) {
    NationalSeries series;
    const NationalInput* prev = nullptr;
    const NationalRow* prev_row = nullptr;
    for (const auto& in : inputs) {
        if (prev && in.year != prev->year + 1) {
            std::ostringstream msg;
            msg << "national series years not consecutive: " << prev->year << " -> " << in.year;
            throw DataError(msg.str());
        }
        if (in.capacity_t <= 0 || in.catch_t <= 0) {
            std::ostringstream msg;
            msg << "year " << in.year << ": catch and capacity must be positive";
            throw DataError(msg.str());
        }
        NationalRow row;
        row.year = in.year;
        row.catch_t = in.catch_t;
        row.capacity_t = in.capacity_t;
        row.income_yuan = in.income_yuan;
        row.utilization = in.catch_t / in.capacity_t;
        if (in.income_yuan) {
            row.income_per_capacity_ton = *in.income_yuan / in.capacity_t;
            row.income_per_catch_ton = *in.income_yuan / in.catch_t;
        }
        if (prev) {
            row.capacity_increment = in.capacity_t - prev->capacity_t;
            row.utilization_increment = row.utilization - prev_row->utilization;
        }
        series.rows.push_back(row);
        prev = &in;
        prev_row = &series.rows.back();
    }
    return series;
}

std::vector<NationalInput> load_national(std::istream& in) {
    std::string line;
    int line_no = 0;
    std::vector<NationalInput> rows;
    bool header_checked = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        auto fields = split_csv_line(line);
        if (!header_checked) {
            header_checked = true;
            if (!fields.empty() && fields[0] == "year") continue;
        }
        if (fields.size() != 4) {
            std::ostringstream msg;
            msg << "line " << line_no << ": expected 4 fields, got " << fields.size();
            throw DataError(msg.str());
        }
        NationalInput row;
        row.year = parse_year(fields[0], line_no);
        row.catch_t = parse_double(fields[1], "catch_t", line_no);
        row.capacity_t = parse_double(fields[2], "capacity_t", line_no);
        if (!fields[3].empty())
            row.income_yuan = parse_double(fields[3], "income_yuan", line_no);
        rows.push_back(row);
    }
    return rows;
}

std::vector<RecordedDea> load_recorded_dea(std::istream& in) {
    std::string line;
    int line_no = 0;
    std::vector<RecordedDea> rows;
    bool header_checked = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        auto fields = split_csv_line(line);
        if (!header_checked) {
            header_checked = true;
            if (!fields.empty() && fields[0] == "year") continue;
        }
        if (fields.size() != 4) {
            std::ostringstream msg;
            msg << "line " << line_no << ": expected 4 fields, got " << fields.size();
            throw DataError(msg.str());
        }
        RecordedDea row;
        row.year = parse_year(fields[0], line_no);
        row.province = fields[1];
        row.cu = parse_double(fields[2], "cu", line_no);
        row.capacity_output_t = parse_double(fields[3], "capacity_output_t", line_no);
        rows.push_back(row);
    }
    return rows;
}

} // namespace fleetcap
