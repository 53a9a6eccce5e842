#include "divtop/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace divtop {

OutputFormat parse_output_format(const std::string& name) {
    if (name == "table") return OutputFormat::Table;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    throw std::invalid_argument("unknown output format '" + name + "'");
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    for (int prec = 1; prec <= 17; prec++) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

std::string rows_to_csv(const std::vector<ConvergenceRow>& rows) {
    std::string out = "quantity,n,measured,predicted,ratio,residual\n";
    for (const auto& r : rows) {
        out += r.quantity;
        out += ',' + std::to_string(r.n);
        out += ',' + std::to_string(r.measured);
        out += ',' + format_double(r.predicted);
        out += ',' + (r.degenerate ? "nan" : format_double(r.ratio));
        out += ',' + format_double(r.residual);
        out += '\n';
    }
    return out;
}

std::string rows_to_json(const std::vector<ConvergenceRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json j;
        j["quantity"] = r.quantity;
        j["n"] = r.n;
        j["measured"] = r.measured;
        j["predicted"] = r.predicted;
        if (r.degenerate)
            j["ratio"] = nullptr;
        else
            j["ratio"] = r.ratio;
        j["residual"] = r.residual;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::string rows_to_table(const std::vector<ConvergenceRow>& rows) {
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof(line), "%-28s %12s %14s %16s %12s %14s\n", "quantity", "n",
                  "measured", "predicted", "ratio", "residual");
    out << line;
    for (const auto& r : rows) {
        std::snprintf(line, sizeof(line), "%-28s %12llu %14lld %16.6f %12s %14.4f%s\n",
                      r.quantity.c_str(), static_cast<unsigned long long>(r.n),
                      static_cast<long long>(r.measured), r.predicted,
                      r.degenerate ? "-" : format_double(r.ratio).c_str(), r.residual,
                      r.degenerate ? "  (degenerate)" : "");
        out << line;
    }
    return out.str();
}

std::string render_rows(const std::vector<ConvergenceRow>& rows, OutputFormat f) {
    switch (f) {
        case OutputFormat::Csv: return rows_to_csv(rows);
        case OutputFormat::Json: return rows_to_json(rows);
        case OutputFormat::Table: return rows_to_table(rows);
    }
    return {};
}

std::string series_to_csv(const std::vector<SeriesRow>& rows) {
    std::string out = "quantity,n,value\n";
    for (const auto& r : rows)
        out += r.quantity + ',' + std::to_string(r.n) + ',' + std::to_string(r.value) + '\n';
    return out;
}

std::string series_to_json(const std::vector<SeriesRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json j;
        j["quantity"] = r.quantity;
        j["n"] = r.n;
        j["value"] = r.value;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::string render_series(const std::vector<SeriesRow>& rows, OutputFormat f) {
    if (f == OutputFormat::Json) return series_to_json(rows);
    if (f == OutputFormat::Csv) return series_to_csv(rows);
    std::ostringstream out;
    for (const auto& r : rows)
        out << r.quantity << '(' << r.n << ") = " << r.value << '\n';
    return out.str();
}

namespace {

int64_t reduced_euler_from_betti(const BettiVector& v) {
    int64_t chi = 0;
    for (const auto& [k, b] : v.values()) chi += (k & 1) ? -b : b;
    return chi;
}

}  // namespace

std::string betti_to_table(const BettiVector& v) {
    std::ostringstream out;
    out << "n = " << v.n() << "  method = " << to_string(v.method()) << '\n';
    if (v.values().empty()) out << "  all Betti numbers vanish\n";
    for (const auto& [k, b] : v.values()) out << "  beta[" << k << "] = " << b << '\n';
    const int64_t chi = reduced_euler_from_betti(v);
    out << "  reduced Euler characteristic = " << chi
        << "  (alternating Betti sum = " << -chi << ")\n";
    return out.str();
}

std::string betti_to_csv(const BettiVector& v) {
    std::string out = "k,beta\n";
    for (const auto& [k, b] : v.values())
        out += std::to_string(k) + ',' + std::to_string(b) + '\n';
    return out;
}

std::string betti_to_json(const BettiVector& v) {
    nlohmann::ordered_json j;
    j["n"] = v.n();
    j["method"] = to_string(v.method());
    nlohmann::ordered_json vals = nlohmann::ordered_json::object();
    for (const auto& [k, b] : v.values()) vals[std::to_string(k)] = b;
    j["betti"] = std::move(vals);
    j["euler_characteristic"] = reduced_euler_from_betti(v);
    return j.dump(2) + "\n";
}

std::string render_betti(const BettiVector& v, OutputFormat f) {
    switch (f) {
        case OutputFormat::Csv: return betti_to_csv(v);
        case OutputFormat::Json: return betti_to_json(v);
        case OutputFormat::Table: return betti_to_table(v);
    }
    return {};
}

}  // namespace divtop
