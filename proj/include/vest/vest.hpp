#pragma once

#include "vest/error.hpp"
#include "vest/evaluate.hpp"
#include "vest/graph.hpp"
#include "vest/instance.hpp"
#include "vest/io.hpp"
#include "vest/layout.hpp"
#include "vest/linalg.hpp"
#include "vest/rational.hpp"
#include "vest/reduction.hpp"
