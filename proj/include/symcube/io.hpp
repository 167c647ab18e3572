#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "symcube/cube.hpp"

namespace symcube {

struct ParseError : std::runtime_error {
    ParseError(std::string message, int line, int column);
    int line;    // 1-based; 0 when unknown
    int column;  // 1-based; 0 when unknown
};

// Grid format: a header line "order N", then N layer blocks separated by
// blank lines, each N rows of N space-separated symbols; block l holds the
// cells (i, j, l) with rows i top to bottom and columns j left to right.
// The writer emits the canonical form (single spaces, one blank line between
// blocks, trailing newline); the reader accepts any whitespace layout.
LatinCube read_cube_grid(std::istream& in);
void write_cube_grid(std::ostream& out, const LatinCube& cube);

// JSON format: {"order": n, "symbols": n^2, "cells": [[[ ... ]]]} with
// cells[i-1][j-1][l-1]. "symbols" is checked when present.
LatinCube read_cube_json(std::istream& in);
void write_cube_json(std::ostream& out, const LatinCube& cube);

// Sniffs the format from the first non-whitespace byte ('{' means JSON).
LatinCube read_cube_auto(std::istream& in);

std::string cube_to_string(const LatinCube& cube, const std::string& format);

}  // namespace symcube
