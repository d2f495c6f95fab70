#include "matrix_io.hpp"

#include <cctype>
#include <fstream>

namespace tiltrich::cli {

Rational parse_rational(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    const auto slash = t.find('/');
    auto valid_int = [](const std::string& s) {
        std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (start == s.size()) return false;
        for (std::size_t i = start; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    const std::string num = t.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den.find('-') != std::string::npos)
        throw DomainError("bad rational '" + text + "'");
    const BigInt d(den[0] == '+' ? den.substr(1) : den);
    if (d == 0) throw DomainError("zero denominator in '" + text + "'");
    return Rational(BigInt(num[0] == '+' ? num.substr(1) : num), d);
}

nlohmann::ordered_json matrix_to_json(const ExactMatrix<Rational>& m) {
    auto out = nlohmann::ordered_json::array();
    for (int i = 1; i <= m.size(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (int j = 1; j <= m.size(); ++j) row.push_back(m(i, j).str());
        out.push_back(row);
    }
    return out;
}

ExactMatrix<Rational> matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw DomainError("matrix JSON must be a nonempty array of rows");
    const int n = static_cast<int>(j.size());
    ExactMatrix<Rational> m(n);
    for (int r = 0; r < n; ++r) {
        const auto& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != n) throw DomainError("matrix JSON must be square");
        for (int c = 0; c < n; ++c) {
            const auto& e = row[static_cast<std::size_t>(c)];
            if (e.is_string()) m(r + 1, c + 1) = parse_rational(e.get<std::string>());
            else if (e.is_number_integer()) m(r + 1, c + 1) = Rational(e.get<long long>());
            else throw DomainError("matrix entries must be strings or integers");
        }
    }
    return m;
}

ExactMatrix<Rational> read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("bad matrix JSON: ") + e.what());
    }
    return matrix_from_json(j);
}

}  // namespace tiltrich::cli
