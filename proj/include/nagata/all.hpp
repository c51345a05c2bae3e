#pragma once

#include "nagata/algebra.hpp"
#include "nagata/bimodule.hpp"
#include "nagata/core.hpp"
#include "nagata/corpus.hpp"
#include "nagata/enumerate.hpp"
#include "nagata/fractions.hpp"
#include "nagata/io.hpp"
#include "nagata/iso.hpp"
#include "nagata/product.hpp"
#include "nagata/suite.hpp"
#include "nagata/twist.hpp"
