#include "cnx/oracle.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#ifndef CNX_SOURCE_DIR
#define CNX_SOURCE_DIR "."
#endif

namespace cnx {

std::string oracle_path() {
    if (const char* dir = std::getenv("CNX_DATA_DIR"))
        return std::string(dir) + "/oracle_data.json";
    return std::string(CNX_SOURCE_DIR) + "/tests/oracle_data.json";
}

const Json& oracle_data() {
    static const Json data = [] {
        std::string path = oracle_path();
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open reference data file: " + path);
        Json j;
        in >> j;
        return j;
    }();
    return data;
}

double json_double(const Json& v) {
    if (v.is_string()) return std::strtod(v.get<std::string>().c_str(), nullptr);
    return v.get<double>();
}

std::map<ExpVec, Rational> json_poly_terms(const Json& terms) {
    std::map<ExpVec, Rational> out;
    for (const auto& t : terms) {
        ExpVec e = t.at(0).get<ExpVec>();
        Rational c(BigInt(t.at(1).get<long long>()));
        out.emplace(std::move(e), std::move(c));
    }
    return out;
}

std::vector<double> json_double_vector(const Json& v) {
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(json_double(x));
    return out;
}

}  // namespace cnx
