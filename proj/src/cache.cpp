#include "cohomlab/cache.hpp"

#include <fstream>

#include "cohomlab/character_table.hpp"
#include "cohomlab/json_io.hpp"

namespace cohomlab {

bool load_table_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) return false;
    json doc;
    try {
        in >> doc;
    } catch (const json::exception&) {
        return false;
    }
    if (!doc.is_object() || doc.value("version", 0) != kCacheFormatVersion) return false;
    bool loaded = false;
    const json tables = doc.value("tables", json::object());
    for (const auto& [key, rows_json] : tables.items()) {
        int m = 0;
        try {
            m = std::stoi(key);
        } catch (...) {
            continue;
        }
        if (m < 1 || !rows_json.is_object()) continue;
        try {
            const auto& classes = partitions_of(m);
            std::vector<std::vector<Integer>> rows(classes.size());
            for (size_t li = 0; li < classes.size(); ++li) {
                const json& row_json = rows_json.at(classes[li].to_string());
                std::vector<Integer> row;
                for (const auto& v : row_json) row.push_back(integer_from_json(v));
                rows[li] = std::move(row);
            }
            adopt_character_table(CharacterTable(m, std::move(rows)));
            loaded = true;
        } catch (const std::exception&) {
            // wrong shape: recompute instead of trusting the file
        }
    }
    return loaded;
}

void save_table_cache(const std::string& path, int up_to_m) {
    json tables = json::object();
    for (int m = 1; m <= up_to_m; ++m) {
        const CharacterTable& t = CharacterTable::get(m);
        const auto& classes = partitions_of(m);
        json rows = json::object();
        for (size_t li = 0; li < classes.size(); ++li) {
            json r = json::array();
            for (const auto& v : t.rows()[li]) r.push_back(integer_to_json(v));
            rows[classes[li].to_string()] = r;
        }
        tables[std::to_string(m)] = rows;
    }
    std::ofstream out(path);
    out << json{{"version", kCacheFormatVersion}, {"tables", tables}}.dump(1) << "\n";
}

}  // namespace cohomlab
