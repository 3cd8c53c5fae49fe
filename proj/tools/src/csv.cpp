#include "chiralq_app/csv.hpp"

#include "chiralq/errors.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace chiralq::app {
namespace {

template <class Row>
void for_each_node(const SpacetimeGrid& g, Row&& row) {
    for (std::size_t k = 0; k < g.size(); ++k) {
        const auto i = g.unravel(k);
        row(k, g.time(i[0]), g.point(i[1], i[2], i[3]));
    }
}

void write_coords(std::ostream& os, double t, const Vec3& x) {
    os << format_double(t) << ',' << format_double(x.x1) << ',' << format_double(x.x2) << ',' << format_double(x.x3);
}

} // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void emit_csv(const SampledField& field, std::ostream& os) {
    os << kFieldHeader << '\n';
    for_each_node(field.grid, [&](std::size_t k, double t, const Vec3& x) {
        const Biquaternion& q = field.values[k];
        write_coords(os, t, x);
        os << ',' << format_double(q.s.real()) << ',' << format_double(q.s.imag());
        for (const cplx& c : q.v) {
            os << ',' << format_double(c.real()) << ',' << format_double(c.imag());
        }
        os << '\n';
    });
}

void emit_csv(const SampledField& field, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    emit_csv(field, out);
    out.flush();
    if (!out) {
        throw IoError("failed writing '" + path + "'");
    }
}

void emit_em_csv(const EMField& em, std::ostream& os) {
    os << kEMHeader << '\n';
    for_each_node(em.E.grid, [&](std::size_t k, double t, const Vec3& x) {
        write_coords(os, t, x);
        for (const Vec3* v : {&em.E.values[k], &em.H.values[k]}) {
            os << ',' << format_double(v->x1) << ',' << format_double(v->x2) << ',' << format_double(v->x3);
        }
        os << '\n';
    });
}

void emit_verify_csv(const std::vector<CheckResult>& results, std::ostream& os) {
    os << kVerifyHeader << '\n';
    for (const auto& r : results) {
        for (const auto& m : r.metrics) {
            os << r.id << ',' << m.name << ',' << format_double(m.value) << ',' << format_double(m.lower) << ','
               << format_double(m.upper) << ',' << (m.passed() ? 1 : 0) << '\n';
        }
        if (!r.error.empty()) {
            os << r.id << ",error,nan,-inf,inf,0\n";
        }
    }
}

std::vector<std::vector<double>> parse_numeric_csv(std::istream& is, std::string* header) {
    std::string line;
    if (!std::getline(is, line)) {
        throw IoError("CSV input is empty");
    }
    if (header != nullptr) {
        *header = line;
    }
    std::vector<std::vector<double>> rows;
    while (std::getline(is, line)) {
        std::vector<double> row;
        std::stringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            char* end = nullptr;
            row.push_back(std::strtod(cell.c_str(), &end));
            if (end == cell.c_str() || *end != '\0') {
                throw IoError("non-numeric CSV cell '" + cell + "'");
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace chiralq::app
