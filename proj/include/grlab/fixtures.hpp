#pragma once

#include <optional>
#include <string>

#include "grlab/catalog.hpp"
#include "grlab/colored_graph.hpp"

namespace grlab {

// Resolves cached base colorings and the pinned preset table from the data
// directory: $GRLAB_DATA_DIR when set, else the compiled-in default.
class FixtureStore {
public:
    static std::string default_data_dir();

    FixtureStore() : FixtureStore(default_data_dir()) {}
    explicit FixtureStore(std::string dir) : dir_(std::move(dir)) {}

    const std::string& dir() const { return dir_; }
    std::string path_for(const std::string& name) const;
    bool available(const std::string& name) const;
    ColoredCompleteGraph load(const std::string& name) const;

    // committed preset table, or the unpinned built-in when absent
    PresetTable presets() const;
    bool presets_pinned() const;

private:
    std::string dir_;
};

}  // namespace grlab
