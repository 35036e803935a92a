#include "biquad/catalog.hpp"

#include "biquad/format.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace biquad {

namespace fs = std::filesystem;

std::string catalog_dir() {
    if (const char* env = std::getenv("BIQUAD_CATALOG_DIR"); env && *env) return env;
#ifdef BIQUAD_CATALOG_DIR
    return BIQUAD_CATALOG_DIR;
#else
    return "data/catalog";
#endif
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    fs::path dir(catalog_dir());
    if (fs::is_directory(dir)) {
        for (const auto& entry : fs::directory_iterator(dir)) {
            if (entry.is_regular_file() && entry.path().extension() == ".alg")
                names.push_back(entry.path().stem().string());
        }
    }
    std::sort(names.begin(), names.end());
    return names;
}

std::string catalog_text(const std::string& name) {
    if (name.empty() || name.find('/') != std::string::npos) throw UnknownName(name);
    fs::path file = fs::path(catalog_dir()) / (name + ".alg");
    std::ifstream in(file);
    if (!in) throw UnknownName(name);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

AlgebraPresentation catalog_get(const std::string& name) {
    AlgebraPresentation pres = parse_presentation(catalog_text(name));
    if (pres.name.empty()) pres.name = name;
    return pres;
}

}  // namespace biquad
