#pragma once

#include <map>
#include <optional>
#include <utility>

#include "dct/indexing.hpp"

namespace dct {

/// Parse or semantic error with a source position. `code` is one of
/// SyntaxError, MissingEntry, DuplicateName, DuplicateEntry,
/// UnresolvedReference, FiberMismatch.
class ParseError : public Error {
public:
    ParseError(std::string code, int line, int col, const std::string& message)
        : Error(std::move(code), "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + message),
          line_(line),
          col_(col) {}

    [[nodiscard]] int line() const { return line_; }
    [[nodiscard]] int col() const { return col_; }

private:
    int line_;
    int col_;
};

struct SourcePos {
    int line = 0;
    int col = 0;
};

/// Declaration of an indexing, storing exactly the non-derivable rows:
/// one per non-identity morphism with a non-trivial source fiber, each
/// mapping the non-unit fiber elements.
struct IndexingDecl {
    Id name;
    Id decorated;
    Variance variance = Variance::Covariant;
    std::map<Id, std::map<Id, Id>> rows;  // morphism -> element -> element

    bool operator==(const IndexingDecl&) const = default;
};

/// All declarations of one source file, in resolved and canonical form;
/// identities and identity cells are explicit in the stored structures.
struct Workspace {
    std::map<Id, FinCommMonoid> monoids;
    std::map<Id, FinCategory> categories;
    std::map<Id, Fin2Category> twocats;
    std::map<Id, std::pair<Id, Id>> decorations;  // name -> (category, twocat)
    std::map<Id, IndexingDecl> indexings;
    std::map<Id, SourcePos> positions;  // not part of structural equality

    bool operator==(const Workspace& o) const {
        return monoids == o.monoids && categories == o.categories && twocats == o.twocats &&
               decorations == o.decorations && indexings == o.indexings;
    }

    [[nodiscard]] DecoratedTwoCat decorated(const Id& name) const;
    [[nodiscard]] Pi2Indexing indexing(const Id& name) const;
};

/// Parses a specification file. Throws ParseError at the first syntax or
/// semantic defect; never crashes on malformed input.
[[nodiscard]] Workspace parse_spec(const std::string& text);

/// Canonical rendering: declarations sorted by kind and name, table rows
/// sorted, derivable rows omitted, LF line endings. parse_spec of the
/// output reproduces the workspace.
[[nodiscard]] std::string serialize(const Workspace& w);

}  // namespace dct
