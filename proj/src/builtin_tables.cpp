#include "equigen/character_table.hpp"

#include "equigen/json_io.hpp"
#include "embedded_tables.hpp"

#include <map>
#include <mutex>

namespace equigen {

namespace {

TablePtr make_trivial() {
    return std::make_shared<CharacterTable>(
        "TRIVIAL", 1, std::vector<ConjClass>{{"1A", 1, 1}},
        std::vector<std::vector<int>>{{0}},
        std::vector<std::vector<Cyclotomic>>{{Cyclotomic(1)}});
}

TablePtr make_cyclic(long n) {
    std::vector<ConjClass> classes;
    std::vector<std::vector<int>> power_map;
    for (long k = 0; k < n; ++k) {
        const long order = n / std::gcd(n, k == 0 ? n : k);
        classes.push_back({"g" + std::to_string(k), 1, order});
        std::vector<int> row(order);
        for (long j = 0; j < order; ++j) row[j] = static_cast<int>((k * j) % n);
        power_map.push_back(std::move(row));
    }
    std::vector<std::vector<Cyclotomic>> irreps(n, std::vector<Cyclotomic>(n));
    for (long i = 0; i < n; ++i)
        for (long k = 0; k < n; ++k) irreps[i][k] = Cyclotomic::root_of_unity(n, i * k);
    return std::make_shared<CharacterTable>("Z" + std::to_string(n), n, std::move(classes),
                                            std::move(power_map), std::move(irreps));
}

std::mutex registry_mutex;

}  // namespace

TablePtr cyclic_table(long n) {
    if (n < 1) throw precondition_error("cyclic table order must be positive");
    if (n == 1) return builtin_table("TRIVIAL");
    static std::map<long, TablePtr> cache;
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_cyclic(n)).first;
    return it->second;
}

TablePtr builtin_table(const std::string& name) {
    static std::map<std::string, TablePtr> cache;
    {
        std::lock_guard<std::mutex> lock(registry_mutex);
        auto it = cache.find(name);
        if (it != cache.end()) return it->second;
    }
    TablePtr made;
    if (name == "TRIVIAL" || name == "Z1") {
        made = make_trivial();
    } else if (name.size() >= 2 && name[0] == 'Z') {
        long n = 0;
        try {
            n = std::stol(name.substr(1));
        } catch (...) {
            throw precondition_error("unknown built-in table '" + name + "'");
        }
        if (n < 2 || n > 8) throw precondition_error("cyclic built-ins cover Z2..Z8, got " + name);
        made = make_cyclic(n);
    } else if (const char* json_text = detail::embedded_table_json(name)) {
        made = table_from_json(Json::parse(json_text));
    } else {
        throw precondition_error("unknown built-in table '" + name + "'");
    }
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto [it, inserted] = cache.emplace(name, made);
    return it->second;
}

std::vector<std::string> builtin_table_names() {
    return {"TRIVIAL", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "PSL27", "A5", "A6", "S5"};
}

}  // namespace equigen
