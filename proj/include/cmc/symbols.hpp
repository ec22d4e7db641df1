#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "cmc/errors.hpp"

namespace cmc {

using SymbolId = int;

// Registry of indeterminates. Ids are dense and assigned in registration
// order; that order fixes the monomial order, so a computation's canonical
// text is reproducible only against the same table.
class SymbolTable {
  public:
    SymbolId register_symbol(const std::string& name) {
        auto it = ids_.find(name);
        if (it != ids_.end()) return it->second;
        validate(name);
        SymbolId id = static_cast<SymbolId>(names_.size());
        names_.push_back(name);
        ids_.emplace(name, id);
        return id;
    }

    // -1 when the name is not registered.
    SymbolId id(const std::string& name) const {
        auto it = ids_.find(name);
        return it == ids_.end() ? -1 : it->second;
    }

    SymbolId require(const std::string& name) const {
        SymbolId s = id(name);
        if (s < 0) throw parse_error("unknown symbol: " + name);
        return s;
    }

    const std::string& name(SymbolId id) const { return names_.at(static_cast<size_t>(id)); }

    size_t size() const { return names_.size(); }

  private:
    static void validate(const std::string& name) {
        if (name.empty()) throw parse_error("empty symbol name");
        auto head = name[0];
        if (!(std::isalpha(static_cast<unsigned char>(head)) || head == '_'))
            throw parse_error("bad symbol name: " + name);
        for (char ch : name)
            if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
                throw parse_error("bad symbol name: " + name);
    }

    std::vector<std::string> names_;
    std::unordered_map<std::string, SymbolId> ids_;
};

} // namespace cmc
