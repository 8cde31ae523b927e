#include "acttend/dataset.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "acttend/errors.hpp"

namespace acttend {

void validate(const Dataset& ds) {
    if (ds.n() < 2) throw InputError("dataset must have at least 2 points, got " + std::to_string(ds.n()));
    if (ds.dim() < 1) throw InputError("dataset must have dimension >= 1, got " + std::to_string(ds.dim()));
    for (double v : ds.points.values())
        if (!std::isfinite(v)) throw InputError("dataset contains a non-finite entry");
}

Matrix standardize_points(const Matrix& points) {
    const int n = points.rows(), d = points.cols();
    Matrix out = points;
    for (int j = 0; j < d; ++j) {
        double mean = 0.0;
        for (int i = 0; i < n; ++i) mean += points(i, j);
        mean /= n;
        double var = 0.0;
        for (int i = 0; i < n; ++i) {
            double c = points(i, j) - mean;
            var += c * c;
        }
        var /= n;
        double std = std::sqrt(var);
        if (std == 0.0) std = 1.0;
        for (int i = 0; i < n; ++i) out(i, j) = (points(i, j) - mean) / std;
    }
    return out;
}

Dataset standardize(const Dataset& ds) {
    Dataset out = ds;
    out.points = standardize_points(ds.points);
    return out;
}

void save_csv(const Dataset& ds, const std::string& csv_path) {
    std::ofstream f(csv_path);
    if (!f) throw IoError("cannot open for writing: " + csv_path);
    char buf[64];
    for (int i = 0; i < ds.n(); ++i) {
        for (int j = 0; j < ds.dim(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", ds.points(i, j));
            f << buf;
            if (j + 1 < ds.dim()) f << ',';
        }
        f << '\n';
    }
    if (!f) throw IoError("write failed: " + csv_path);
}

void save_sidecar(const Dataset& ds, const std::string& json_path) {
    nlohmann::json j;
    if (ds.label.has_value())
        j["label"] = *ds.label;
    else
        j["label"] = nullptr;
    j["seed"] = ds.seed;
    j["dim"] = ds.dim();
    j["n"] = ds.n();
    std::ofstream f(json_path);
    if (!f) throw IoError("cannot open for writing: " + json_path);
    f << j.dump(2) << '\n';
}

Dataset load_csv(const std::string& csv_path) {
    std::ifstream f(csv_path);
    if (!f) throw IoError("cannot open: " + csv_path);
    std::vector<double> values;
    std::string line;
    int cols = -1, rows = 0;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        int c = 0;
        while (std::getline(ss, cell, ',')) {
            std::size_t pos = 0;
            double v;
            try {
                v = std::stod(cell, &pos);
            } catch (const std::exception&) {
                throw FormatError(csv_path + ": row " + std::to_string(rows + 1) +
                                  " has a non-numeric cell '" + cell + "'");
            }
            values.push_back(v);
            ++c;
        }
        if (cols < 0)
            cols = c;
        else if (c != cols)
            throw FormatError(csv_path + ": row " + std::to_string(rows + 1) + " has " +
                              std::to_string(c) + " cells, expected " + std::to_string(cols));
        ++rows;
    }
    if (rows == 0) throw FormatError(csv_path + ": no data rows");
    Dataset ds;
    ds.points = Matrix(rows, cols, std::move(values));
    validate(ds);
    return ds;
}

Dataset load_csv(const std::string& csv_path, const std::string& sidecar_path) {
    Dataset ds = load_csv(csv_path);
    std::ifstream f(sidecar_path);
    if (!f) throw IoError("cannot open: " + sidecar_path);
    nlohmann::json j;
    try {
        f >> j;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(sidecar_path + ": " + e.what());
    }
    if (j.contains("label") && !j["label"].is_null()) ds.label = j["label"].get<bool>();
    if (j.contains("seed")) ds.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("n") && j["n"].get<int>() != ds.n())
        throw FormatError(sidecar_path + ": sidecar n=" + std::to_string(j["n"].get<int>()) +
                          " does not match CSV rows=" + std::to_string(ds.n()));
    if (j.contains("dim") && j["dim"].get<int>() != ds.dim())
        throw FormatError(sidecar_path + ": sidecar dim=" + std::to_string(j["dim"].get<int>()) +
                          " does not match CSV cols=" + std::to_string(ds.dim()));
    return ds;
}

}  // namespace acttend
