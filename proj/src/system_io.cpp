#include "tlcat/system_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace tlcat {

namespace {

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string r;
    for (char c : s) {
        if (c == '"' || c == '\\') r.push_back('\\');
        r.push_back(c);
    }
    return r;
}

}  // namespace

std::string serialize_system(const MonoidalSystem& sys) {
    std::ostringstream os;
    os << "{\n  \"format_version\": 1,\n  \"tolerance\": " << fmt17(sys.tolerance()) << ",\n";
    if (sys.truncation_cap()) os << "  \"truncation_cap\": " << *sys.truncation_cap() << ",\n";
    os << "  \"labels\": [\n";
    for (int i = 0; i < sys.num_labels(); ++i) {
        const auto& l = sys.label(i);
        os << "    {\"id\": \"" << json_escape(l.id) << "\", \"name\": \"" << json_escape(l.name)
           << "\", \"is_unit\": " << (i == sys.unit() ? "true" : "false") << "}"
           << (i + 1 < sys.num_labels() ? "," : "") << "\n";
    }
    os << "  ],\n  \"fusion\": [\n";
    {
        const auto& entries = sys.rules().entries();
        size_t i = 0;
        for (const auto& [k, n] : entries) {
            os << "    [\"" << json_escape(sys.label(k[0]).id) << "\", \""
               << json_escape(sys.label(k[1]).id) << "\", \"" << json_escape(sys.label(k[2]).id)
               << "\", " << n << "]" << (++i < entries.size() ? "," : "") << "\n";
        }
    }
    os << "  ],\n  \"f_symbols\": [\n";
    {
        const auto& entries = sys.f_table().entries();
        size_t i = 0;
        for (const auto& [k, v] : entries) {
            os << "    [";
            for (int j = 0; j < 6; ++j) os << "\"" << json_escape(sys.label(k[j]).id) << "\", ";
            os << fmt17(v.real()) << ", " << fmt17(v.imag()) << "]"
               << (++i < entries.size() ? "," : "") << "\n";
        }
    }
    os << "  ]\n}\n";
    return os.str();
}

void save_system(const MonoidalSystem& sys, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << serialize_system(sys);
}

MonoidalSystem parse_system(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("system file: invalid JSON: ") + e.what());
    }
    if (!j.contains("labels") || !j["labels"].is_array() || j["labels"].empty())
        throw std::runtime_error("system file: missing or empty 'labels' array");

    std::vector<LabelInfo> labels;
    int unit = -1;
    std::map<std::string, int> index;
    for (const auto& l : j["labels"]) {
        if (!l.contains("id")) throw std::runtime_error("system file: label without 'id'");
        LabelInfo info{l["id"].get<std::string>(),
                       l.contains("name") ? l["name"].get<std::string>() : l["id"].get<std::string>()};
        if (index.count(info.id)) throw std::runtime_error("system file: duplicate label id " + info.id);
        index[info.id] = static_cast<int>(labels.size());
        if (l.value("is_unit", false)) {
            if (unit >= 0) throw std::runtime_error("system file: more than one unit label");
            unit = static_cast<int>(labels.size());
        }
        labels.push_back(std::move(info));
    }
    if (unit < 0) throw std::runtime_error("system file: no label flagged is_unit");

    auto look = [&](const nlohmann::json& v, const char* where) {
        if (!v.is_string()) throw std::runtime_error(std::string("system file: non-string label in ") + where);
        auto it = index.find(v.get<std::string>());
        if (it == index.end())
            throw std::runtime_error("system file: unknown label '" + v.get<std::string>() + "' in " + where);
        return it->second;
    };

    FusionRules rules;
    for (const auto& rec : j.value("fusion", nlohmann::json::array())) {
        if (!rec.is_array() || rec.size() != 4)
            throw std::runtime_error("system file: fusion record must be [a,b,c,N]");
        rules.set(look(rec[0], "fusion"), look(rec[1], "fusion"), look(rec[2], "fusion"),
                  rec[3].get<unsigned>());
    }
    FSymbolTable f;
    for (const auto& rec : j.value("f_symbols", nlohmann::json::array())) {
        if (!rec.is_array() || rec.size() != 8)
            throw std::runtime_error("system file: f_symbol record must be [a,b,c,d,e,f,re,im]");
        f.set(look(rec[0], "f_symbols"), look(rec[1], "f_symbols"), look(rec[2], "f_symbols"),
              look(rec[3], "f_symbols"), look(rec[4], "f_symbols"), look(rec[5], "f_symbols"),
              cplx(rec[6].get<double>(), rec[7].get<double>()));
    }
    double tol = j.value("tolerance", 1e-10);
    std::optional<int> cap;
    if (j.contains("truncation_cap")) cap = j["truncation_cap"].get<int>();
    return MonoidalSystem(std::move(labels), unit, std::move(rules), std::move(f), tol, cap);
}

MonoidalSystem load_system(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_system(ss.str());
}

std::string fingerprint(const MonoidalSystem& sys) {
    std::string text = serialize_system(sys);
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx", h);
    return buf;
}

}  // namespace tlcat
