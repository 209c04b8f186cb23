#include "grlab/fixtures.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "grlab/gcg.hpp"

#ifndef GRLAB_DEFAULT_DATA_DIR
#define GRLAB_DEFAULT_DATA_DIR "data"
#endif

namespace grlab {

std::string FixtureStore::default_data_dir() {
    if (const char* env = std::getenv("GRLAB_DATA_DIR"); env && *env) return env;
    return GRLAB_DEFAULT_DATA_DIR;
}

std::string FixtureStore::path_for(const std::string& name) const {
    return dir_ + "/" + name + ".gcg";
}

bool FixtureStore::available(const std::string& name) const {
    return std::filesystem::exists(path_for(name));
}

ColoredCompleteGraph FixtureStore::load(const std::string& name) const {
    if (!available(name))
        throw Error("fixture '" + name + "' unavailable (looked in " + dir_ +
                    "; set GRLAB_DATA_DIR or regenerate, see README)");
    return read_gcg_file(path_for(name));
}

PresetTable FixtureStore::presets() const {
    std::string path = dir_ + "/presets.json";
    std::ifstream in(path, std::ios::binary);
    if (!in) return PresetTable::unpinned();
    std::ostringstream ss;
    ss << in.rdbuf();
    return PresetTable::from_json(ss.str());
}

bool FixtureStore::presets_pinned() const {
    return std::filesystem::exists(dir_ + "/presets.json");
}

}  // namespace grlab
