#pragma once

#include "tbrackets/exactnum.hpp"
#include "tbrackets/labels.hpp"
#include "tbrackets/brackets.hpp"
#include "tbrackets/fockoracle.hpp"
#include "tbrackets/transform.hpp"
#include "tbrackets/serialize.hpp"
#include "tbrackets/verify.hpp"
