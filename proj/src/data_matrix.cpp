#include "ggm/data_matrix.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace ggm {

DataMatrix::DataMatrix(Eigen::MatrixXd values, bool center) : values_(std::move(values)), centered_(center) {
    if (values_.rows() < 1 || values_.cols() < 1) throw DataError("data matrix must be non-empty");
    if (values_.cols() > 64) throw DataError("at most 64 variables are supported");
    if (centered_) {
        values_.rowwise() -= values_.colwise().mean();
        gram_ = values_.transpose() * values_;
    } else {
        gram_ = values_.transpose() * values_;
        Eigen::MatrixXd c = values_;
        c.rowwise() -= c.colwise().mean();
        centered_gram_ = c.transpose() * c;
    }
}

DataMatrix DataMatrix::from_csv(const std::string& path, bool center) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open data file: " + path);

    std::vector<std::vector<double>> rows;
    std::string line;
    bool first = true;
    size_t width = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        bool numeric = true;
        while (std::getline(ss, cell, ',')) {
            try {
                size_t used = 0;
                double v = std::stod(cell, &used);
                while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used]))) ++used;
                if (used != cell.size()) throw std::invalid_argument(cell);
                row.push_back(v);
            } catch (const std::exception&) {
                numeric = false;
                break;
            }
        }
        if (!numeric) {
            if (first) {  // optional header row
                first = false;
                continue;
            }
            throw DataError("non-numeric value in data file: " + path);
        }
        if (width == 0) width = row.size();
        if (row.size() != width) throw DataError("ragged row in data file: " + path);
        rows.push_back(std::move(row));
        first = false;
    }
    if (rows.empty()) throw DataError("data file has no observations: " + path);

    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(width));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < width; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    return DataMatrix(std::move(m), center);
}

void DataMatrix::to_csv(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write data file: " + path);
    out.precision(17);
    for (Eigen::Index i = 0; i < values_.rows(); ++i) {
        for (Eigen::Index j = 0; j < values_.cols(); ++j) {
            if (j > 0) out << ",";
            out << values_(i, j);
        }
        out << "\n";
    }
}

}  // namespace ggm
