#pragma once

#include <stdexcept>
#include <string>

namespace cjkit {

// Base class for everything this library throws on bad input.
// Internal invariant breaches use std::logic_error instead.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyWorldSet : Error {
  EmptyWorldSet() : Error("model needs at least one world") {}
};

struct FrameViolation : Error {
  int world;
  FrameViolation(int world, const std::string& what) : Error(what), world(world) {}
};

struct TooLarge : Error {
  explicit TooLarge(const std::string& what) : Error(what) {}
};

struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& what) : Error(what) {}
};

struct UnknownAtom : Error {
  std::string name;
  explicit UnknownAtom(const std::string& name)
      : Error("unknown atom: " + name), name(name) {}
};

struct SyntaxError : Error {
  std::size_t position;  // 0-based offset into the input text
  std::string expected;
  SyntaxError(std::size_t position, const std::string& expected)
      : Error("syntax error at offset " + std::to_string(position) + ": expected " + expected),
        position(position),
        expected(expected) {}
};

struct UnknownToken : Error {
  std::size_t position;
  explicit UnknownToken(std::size_t position)
      : Error("unknown token at offset " + std::to_string(position)), position(position) {}
};

struct DisjointSeed : Error {
  DisjointSeed() : Error("cannot seed a conditional obligation from disjoint sets") {}
};

struct IterationLimit : Error {
  IterationLimit() : Error("closure exceeded its iteration limit") {}
};

struct ScenarioError : Error {
  int line;  // 1-based line number in the scenario text
  ScenarioError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
};

struct UndeclaredWorld : ScenarioError {
  std::string name;
  UndeclaredWorld(int line, const std::string& name)
      : ScenarioError(line, "undeclared world: " + name), name(name) {}
};

struct UndeclaredAtom : ScenarioError {
  std::string name;
  UndeclaredAtom(int line, const std::string& name)
      : ScenarioError(line, "undeclared atom: " + name), name(name) {}
};

struct UnknownFixture : Error {
  explicit UnknownFixture(const std::string& name) : Error("unknown fixture: " + name) {}
};

}  // namespace cjkit
