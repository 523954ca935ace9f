#include "gaussq/table_data.hpp"

namespace gaussq {

// 690 rows, transcribed from the published tables.
const std::vector<ReferenceRow>& paper1000_rows() {
  static const std::vector<ReferenceRow> rows = {
      {20, 9, 2, 4},
      {21, 4, 3, 4},
      {24, 11, 2, 4},
      {24, 17, 2, 4},
      {24, 19, 2, 4},
      {28, 9, 3, 4},
      {30, 19, 2, 4},
      {33, 4, 5, 4},
      {39, 4, 6, 4},
      {39, 16, 3, 8},
      {40, 13, 4, 4},
      {40, 17, 4, 4},
      {48, 11, 4, 4},
      {48, 19, 4, 4},
      {52, 17, 6, 4},
      {55, 4, 10, 4},
      {55, 16, 5, 8},
      {56, 11, 6, 4},
      {56, 23, 6, 4},
      {56, 37, 6, 4},
      {57, 4, 9, 4},
      {60, 7, 4, 4},
      {60, 13, 4, 4},
      {60, 49, 2, 8},
      {66, 25, 5, 4},
      {68, 9, 8, 4},
      {69, 4, 11, 4},
      {70, 9, 6, 4},
      {72, 11, 6, 4},
      {72, 41, 6, 4},
      {72, 43, 6, 4},
      {77, 4, 15, 4},
      {84, 11, 6, 4},
      {84, 19, 6, 4},
      {84, 53, 6, 4},
      {84, 61, 6, 4},
      {88, 3, 10, 4},
      {88, 17, 10, 4},
      {88, 19, 10, 4},
      {90, 49, 6, 4},
      {92, 9, 11, 4},
      {93, 7, 15, 4},
      {95, 4, 18, 4},
      {96, 11, 8, 4},
      {96, 19, 8, 4},
      {99, 4, 15, 4},
      {100, 9, 10, 4},
      {104, 33, 12, 4},
      {104, 37, 12, 4},
      {105, 17, 12, 4},
      {105, 37, 12, 4},
      {111, 4, 18, 4},
      {112, 11, 12, 4},
      {112, 23, 6, 8},
      {112, 37, 12, 4},
      {114, 25, 9, 4},
      {116, 5, 14, 4},
      {120, 17, 4, 8},
      {120, 53, 4, 8},
      {120, 73, 4, 8},
      {124, 9, 15, 4},
      {129, 10, 21, 4},
      {132, 5, 10, 4},
      {132, 31, 10, 4},
      {132, 47, 10, 4},
      {136, 3, 16, 4},
      {136, 5, 16, 4},
      {138, 13, 11, 4},
      {140, 3, 12, 4},
      {140, 9, 6, 8},
      {140, 17, 12, 4},
      {141, 4, 23, 4},
      {144, 11, 12, 4},
      {144, 43, 12, 4},
      {147, 4, 21, 4},
      {148, 21, 18, 4},
      {150, 19, 10, 4},
      {152, 3, 18, 4},
      {152, 33, 18, 4},
      {152, 35, 18, 4},
      {154, 9, 15, 4},
      {155, 9, 30, 4},
      {155, 41, 15, 8},
      {156, 7, 12, 4},
      {156, 11, 12, 4},
      {156, 29, 6, 8},
      {156, 49, 6, 8},
      {161, 2, 33, 4},
      {164, 5, 20, 4},
      {165, 26, 10, 8},
      {165, 37, 20, 4},
      {165, 38, 20, 4},
      {168, 11, 6, 8},
      {168, 19, 6, 8},
      {168, 59, 6, 8},
      {168, 65, 6, 8},
      {168, 67, 6, 8},
      {168, 73, 6, 8},
      {174, 13, 14, 4},
      {176, 3, 20, 4},
      {176, 19, 20, 4},
      {177, 4, 29, 4},
      {180, 7, 12, 4},
      {180, 13, 12, 4},
      {180, 49, 6, 8},
      {183, 4, 30, 4},
      {184, 3, 22, 4},
      {184, 13, 22, 4},
      {184, 31, 22, 4},
      {188, 9, 23, 4},
      {192, 11, 16, 4},
      {192, 19, 16, 4},
      {196, 9, 21, 4},
      {198, 25, 15, 4},
      {200, 13, 20, 4},
      {200, 17, 20, 4},
      {201, 4, 33, 4},
      {203, 4, 42, 4},
      {203, 16, 21, 8},
      {204, 5, 16, 4},
      {204, 7, 16, 4},
      {204, 11, 16, 4},
      {204, 37, 16, 4},
      {207, 4, 33, 4},
      {209, 4, 45, 4},
      {212, 9, 26, 4},
      {213, 4, 35, 4},
      {216, 11, 18, 4},
      {216, 41, 18, 4},
      {216, 43, 18, 4},
      {219, 19, 36, 4},
      {220, 3, 20, 4},
      {220, 7, 20, 4},
      {220, 9, 10, 8},
      {220, 41, 10, 8},
      {224, 11, 24, 4},
      {224, 23, 12, 8},
      {224, 37, 24, 4},
      {228, 13, 18, 4},
      {228, 43, 18, 4},
      {228, 67, 18, 4},
      {230, 9, 22, 4},
      {231, 2, 30, 4},
      {231, 4, 15, 8},
      {231, 5, 30, 4},
      {231, 19, 30, 4},
      {232, 21, 28, 4},
      {232, 73, 28, 4},
      {237, 4, 39, 4},
      {244, 5, 30, 4},
      {248, 7, 30, 4},
      {248, 19, 30, 4},
      {248, 45, 30, 4},
      {249, 4, 41, 4},
      {253, 3, 55, 4},
      {258, 13, 21, 4},
      {264, 59, 10, 8},
      {270, 49, 18, 4},
      {276, 29, 22, 4},
      {276, 31, 22, 4},
      {276, 35, 22, 4},
      {280, 37, 12, 8},
      {280, 117, 12, 8},
      {280, 137, 12, 8},
      {282, 7, 23, 4},
      {284, 9, 35, 4},
      {286, 49, 30, 4},
      {288, 11, 24, 4},
      {288, 43, 24, 4},
      {291, 25, 48, 4},
      {292, 25, 36, 4},
      {295, 4, 58, 4},
      {296, 5, 36, 4},
      {296, 17, 36, 4},
      {297, 4, 45, 4},
      {299, 4, 66, 4},
      {300, 13, 20, 4},
      {300, 67, 20, 4},
      {300, 109, 10, 8},
      {304, 3, 36, 4},
      {304, 35, 36, 4},
      {308, 39, 30, 4},
      {308, 135, 30, 4},
      {308, 149, 30, 4},
      {309, 4, 51, 4},
      {310, 9, 30, 4},
      {310, 41, 15, 8},
      {312, 37, 12, 8},
      {312, 41, 12, 8},
      {312, 97, 12, 8},
      {312, 149, 12, 8},
      {316, 5, 39, 4},
      {318, 7, 26, 4},
      {321, 4, 53, 4},
      {323, 9, 72, 4},
      {327, 7, 27, 8},
      {327, 28, 54, 4},
      {328, 11, 40, 4},
      {328, 13, 40, 4},
      {329, 2, 69, 4},
      {330, 7, 20, 4},
      {330, 37, 20, 4},
      {330, 49, 10, 8},
      {330, 61, 10, 8},
      {336, 11, 12, 8},
      {336, 19, 12, 8},
      {336, 59, 12, 8},
      {336, 67, 12, 8},
      {344, 3, 42, 4},
      {344, 33, 42, 4},
      {344, 67, 42, 4},
      {345, 13, 44, 4},
      {345, 17, 44, 4},
      {348, 13, 14, 8},
      {348, 19, 28, 4},
      {348, 37, 28, 4},
      {350, 9, 30, 4},
      {352, 3, 40, 4},
      {352, 19, 40, 4},
      {354, 7, 29, 4},
      {355, 4, 70, 4},
      {355, 6, 35, 8},
      {356, 5, 44, 4},
      {357, 5, 48, 4},
      {357, 37, 48, 4},
      {360, 77, 12, 8},
      {360, 97, 12, 8},
      {360, 113, 12, 8},
      {363, 4, 55, 4},
      {368, 3, 44, 4},
      {368, 13, 44, 4},
      {368, 39, 22, 8},
      {371, 4, 78, 4},
      {372, 13, 30, 4},
      {372, 41, 30, 4},
      {372, 43, 30, 4},
      {372, 59, 30, 4},
      {376, 3, 46, 4},
      {376, 7, 46, 4},
      {376, 21, 46, 4},
      {380, 3, 36, 4},
      {380, 9, 18, 8},
      {380, 23, 36, 4},
      {381, 13, 63, 4},
      {384, 11, 32, 4},
      {384, 19, 32, 4},
      {388, 25, 48, 4},
      {390, 7, 12, 8},
      {390, 107, 12, 8},
      {392, 11, 42, 4},
      {392, 23, 42, 4},
      {392, 37, 42, 4},
      {393, 4, 65, 4},
      {395, 4, 78, 4},
      {396, 5, 30, 4},
      {396, 31, 30, 4},
      {396, 47, 30, 4},
      {402, 19, 33, 4},
      {404, 9, 50, 4},
      {406, 9, 42, 4},
      {406, 23, 21, 8},
      {407, 3, 90, 4},
      {412, 17, 51, 4},
      {413, 4, 87, 4},
      {414, 13, 33, 4},
      {417, 4, 69, 4},
      {418, 5, 45, 4},
      {420, 47, 12, 8},
      {420, 53, 12, 8},
      {420, 67, 12, 8},
      {420, 73, 12, 8},
      {420, 109, 6, 16},
      {423, 4, 69, 4},
      {424, 5, 52, 4},
      {424, 33, 52, 4},
      {426, 19, 35, 4},
      {430, 9, 42, 4},
      {432, 11, 36, 4},
      {432, 43, 36, 4},
      {436, 29, 54, 4},
      {437, 4, 99, 4},
      {438, 19, 36, 4},
      {440, 13, 20, 8},
      {440, 17, 20, 8},
      {440, 37, 20, 8},
      {440, 97, 20, 8},
      {444, 19, 36, 4},
      {444, 25, 18, 8},
      {444, 35, 36, 4},
      {448, 11, 48, 4},
      {448, 23, 24, 8},
      {448, 37, 48, 4},
      {450, 79, 30, 4},
      {452, 9, 56, 4},
      {453, 10, 75, 4},
      {456, 67, 18, 8},
      {460, 7, 44, 4},
      {460, 9, 22, 8},
      {460, 17, 44, 4},
      {470, 9, 46, 4},
      {471, 10, 78, 4},
      {472, 3, 58, 4},
      {472, 11, 58, 4},
      {472, 33, 58, 4},
      {473, 9, 105, 4},
      {475, 4, 90, 4},
      {483, 4, 33, 8},
      {483, 10, 66, 4},
      {483, 11, 66, 4},
      {483, 26, 66, 4},
      {488, 17, 60, 4},
      {488, 157, 60, 4},
      {489, 4, 81, 4},
      {490, 9, 42, 4},
      {492, 7, 40, 4},
      {492, 11, 40, 4},
      {492, 13, 40, 4},
      {492, 17, 40, 4},
      {495, 38, 60, 4},
      {495, 58, 60, 4},
      {495, 86, 30, 8},
      {496, 19, 60, 4},
      {496, 45, 60, 4},
      {497, 2, 105, 4},
      {498, 7, 41, 4},
      {500, 9, 50, 4},
      {501, 4, 83, 4},
      {507, 4, 78, 4},
      {507, 16, 39, 8},
      {508, 9, 63, 4},
      {510, 7, 16, 8},
      {516, 19, 42, 4},
      {516, 31, 42, 4},
      {516, 61, 42, 4},
      {517, 3, 115, 4},
      {522, 13, 42, 4},
      {525, 17, 60, 4},
      {525, 37, 60, 4},
      {528, 59, 20, 8},
      {531, 4, 87, 4},
      {536, 11, 66, 4},
      {536, 19, 66, 4},
      {536, 41, 66, 4},
      {537, 4, 89, 4},
      {539, 4, 105, 4},
      {540, 7, 36, 4},
      {540, 13, 36, 4},
      {540, 49, 18, 8},
      {543, 4, 90, 4},
      {543, 13, 45, 8},
      {548, 9, 68, 4},
      {561, 29, 80, 4},
      {561, 31, 80, 4},
      {564, 7, 46, 4},
      {564, 17, 46, 4},
      {564, 59, 46, 4},
      {568, 3, 70, 4},
      {568, 15, 70, 4},
      {568, 29, 70, 4},
      {572, 15, 60, 4},
      {572, 37, 60, 4},
      {572, 49, 30, 8},
      {573, 4, 95, 4},
      {576, 11, 48, 4},
      {576, 43, 48, 4},
      {579, 25, 96, 4},
      {581, 4, 123, 4},
      {582, 25, 48, 4},
      {582, 43, 24, 8},
      {583, 4, 130, 4},
      {584, 5, 72, 4},
      {584, 11, 72, 4},
      {588, 11, 42, 4},
      {588, 53, 42, 4},
      {588, 61, 42, 4},
      {588, 103, 42, 4},
      {594, 25, 45, 4},
      {596, 9, 74, 4},
      {597, 4, 99, 4},
      {598, 49, 66, 4},
      {600, 17, 20, 8},
      {600, 53, 20, 8},
      {600, 73, 20, 8},
      {604, 5, 75, 4},
      {605, 4, 110, 4},
      {605, 16, 55, 8},
      {606, 13, 50, 4},
      {608, 3, 72, 4},
      {608, 35, 72, 4},
      {612, 5, 48, 4},
      {612, 7, 48, 4},
      {612, 11, 48, 4},
      {612, 61, 48, 4},
      {620, 7, 60, 4},
      {620, 13, 60, 4},
      {620, 21, 30, 8},
      {620, 51, 30, 8},
      {621, 4, 99, 4},
      {627, 4, 45, 8},
      {627, 13, 90, 4},
      {627, 14, 90, 4},
      {627, 17, 90, 4},
      {628, 25, 78, 4},
      {632, 5, 78, 4},
      {632, 11, 78, 4},
      {632, 31, 78, 4},
      {633, 4, 105, 4},
      {636, 19, 52, 4},
      {636, 25, 26, 8},
      {636, 61, 52, 4},
      {638, 5, 70, 4},
      {639, 4, 105, 4},
      {642, 13, 53, 4},
      {644, 3, 66, 4},
      {644, 11, 66, 4},
      {644, 37, 66, 4},
      {644, 73, 66, 4},
      {645, 13, 84, 4},
      {645, 62, 84, 4},
      {646, 9, 72, 4},
      {646, 47, 36, 8},
      {648, 11, 54, 4},
      {648, 41, 54, 4},
      {648, 43, 54, 4},
      {649, 3, 145, 4},
      {655, 4, 130, 4},
      {655, 11, 65, 8},
      {660, 17, 20, 8},
      {660, 47, 20, 8},
      {660, 53, 20, 8},
      {660, 61, 10, 16},
      {660, 83, 20, 8},
      {663, 22, 48, 8},
      {663, 29, 48, 8},
      {664, 3, 82, 4},
      {664, 19, 82, 4},
      {664, 57, 82, 4},
      {667, 4, 154, 4},
      {667, 16, 77, 8},
      {668, 9, 83, 4},
      {669, 19, 111, 4},
      {670, 19, 66, 4},
      {672, 11, 24, 8},
      {672, 19, 24, 8},
      {672, 59, 24, 8},
      {672, 67, 24, 8},
      {676, 17, 78, 4},
      {681, 4, 113, 4},
      {687, 19, 57, 8},
      {687, 46, 114, 4},
      {688, 3, 84, 4},
      {688, 67, 84, 4},
      {690, 13, 44, 4},
      {690, 17, 44, 4},
      {692, 9, 86, 4},
      {695, 4, 138, 4},
      {696, 73, 28, 8},
      {696, 77, 28, 8},
      {696, 89, 28, 8},
      {700, 3, 60, 4},
      {700, 9, 30, 8},
      {700, 17, 60, 4},
      {704, 3, 80, 4},
      {704, 19, 80, 4},
      {705, 7, 92, 4},
      {705, 23, 92, 4},
      {708, 5, 58, 4},
      {708, 7, 58, 4},
      {708, 35, 58, 4},
      {710, 9, 70, 4},
      {710, 81, 35, 8},
      {712, 3, 88, 4},
      {712, 13, 88, 4},
      {713, 9, 165, 4},
      {714, 5, 48, 4},
      {714, 11, 48, 4},
      {714, 25, 24, 8},
      {717, 4, 119, 4},
      {723, 49, 120, 4},
      {724, 33, 90, 4},
      {726, 25, 55, 4},
      {731, 9, 168, 4},
      {732, 7, 60, 4},
      {732, 35, 60, 4},
      {732, 49, 30, 8},
      {735, 17, 84, 4},
      {735, 37, 84, 4},
      {736, 3, 88, 4},
      {736, 13, 88, 4},
      {736, 39, 44, 8},
      {737, 4, 165, 4},
      {742, 9, 78, 4},
      {744, 11, 30, 8},
      {744, 19, 30, 8},
      {744, 41, 30, 8},
      {744, 43, 30, 8},
      {744, 59, 30, 8},
      {744, 73, 30, 8},
      {747, 4, 123, 4},
      {748, 3, 80, 4},
      {748, 5, 80, 4},
      {748, 7, 80, 4},
      {748, 29, 80, 4},
      {749, 4, 159, 4},
      {750, 19, 50, 4},
      {752, 3, 92, 4},
      {752, 21, 92, 4},
      {753, 7, 125, 4},
      {755, 11, 75, 8},
      {755, 34, 150, 4},
      {759, 2, 110, 4},
      {759, 5, 110, 4},
      {759, 13, 110, 4},
      {759, 37, 110, 4},
      {760, 13, 36, 8},
      {760, 17, 36, 8},
      {760, 33, 36, 8},
      {760, 93, 36, 8},
      {764, 9, 95, 4},
      {768, 11, 64, 4},
      {768, 19, 64, 4},
      {772, 25, 96, 4},
      {776, 5, 96, 4},
      {776, 59, 96, 4},
      {784, 11, 84, 4},
      {784, 23, 42, 8},
      {784, 37, 84, 4},
      {786, 7, 65, 4},
      {788, 9, 98, 4},
      {789, 4, 131, 4},
      {790, 9, 78, 4},
      {791, 9, 168, 4},
      {792, 59, 30, 8},
      {796, 9, 99, 4},
      {799, 2, 184, 4},
      {804, 7, 66, 4},
      {804, 13, 66, 4},
      {804, 19, 66, 4},
      {805, 2, 132, 4},
      {805, 17, 132, 4},
      {808, 29, 100, 4},
      {808, 73, 100, 4},
      {810, 49, 54, 4},
      {812, 11, 84, 4},
      {812, 23, 42, 8},
      {812, 45, 42, 8},
      {812, 61, 84, 4},
      {813, 4, 135, 4},
      {820, 11, 40, 8},
      {824, 7, 102, 4},
      {824, 19, 102, 4},
      {824, 29, 102, 4},
      {828, 29, 66, 4},
      {828, 31, 66, 4},
      {828, 59, 66, 4},
      {830, 9, 82, 4},
      {831, 7, 138, 4},
      {831, 10, 69, 8},
      {834, 7, 69, 4},
      {836, 17, 90, 4},
      {836, 35, 90, 4},
      {836, 47, 90, 4},
      {840, 173, 12, 16},
      {840, 193, 12, 16},
      {846, 7, 69, 4},
      {847, 4, 165, 4},
      {849, 7, 141, 4},
      {852, 19, 70, 4},
      {852, 29, 70, 4},
      {852, 83, 70, 4},
      {856, 3, 106, 4},
      {856, 17, 106, 4},
      {856, 43, 106, 4},
      {860, 9, 42, 8},
      {860, 13, 84, 4},
      {860, 23, 84, 4},
      {861, 17, 120, 4},
      {861, 58, 120, 4},
      {864, 11, 72, 4},
      {864, 43, 72, 4},
      {869, 4, 195, 4},
      {872, 13, 108, 4},
      {872, 57, 108, 4},
      {876, 5, 72, 4},
      {876, 19, 36, 8},
      {876, 31, 72, 4},
      {876, 77, 18, 16},
      {884, 15, 24, 16},
      {885, 7, 116, 4},
      {885, 17, 116, 4},
      {888, 5, 36, 8},
      {888, 13, 36, 8},
      {888, 17, 36, 8},
      {888, 217, 36, 8},
      {891, 4, 135, 4},
      {892, 9, 111, 4},
      {893, 4, 207, 4},
      {894, 7, 74, 4},
      {895, 4, 178, 4},
      {896, 11, 96, 4},
      {896, 23, 48, 8},
      {896, 37, 96, 4},
      {897, 2, 132, 4},
      {897, 4, 66, 8},
      {897, 11, 132, 4},
      {897, 61, 66, 8},
      {900, 13, 60, 4},
      {900, 67, 60, 4},
      {900, 169, 30, 8},
      {904, 3, 112, 4},
      {904, 5, 112, 4},
      {912, 67, 36, 8},
      {913, 3, 205, 4},
      {915, 97, 60, 8},
      {915, 107, 60, 8},
      {916, 5, 114, 4},
      {917, 4, 195, 4},
      {920, 13, 44, 8},
      {920, 37, 44, 8},
      {920, 73, 44, 8},
      {921, 7, 153, 4},
      {924, 5, 30, 8},
      {924, 17, 30, 8},
      {924, 25, 15, 16},
      {924, 53, 30, 8},
      {924, 61, 30, 8},
      {924, 149, 30, 8},
      {924, 157, 30, 8},
      {924, 193, 30, 8},
      {932, 9, 116, 4},
      {933, 4, 155, 4},
      {939, 13, 156, 4},
      {940, 9, 46, 8},
      {940, 13, 92, 4},
      {940, 23, 92, 4},
      {943, 2, 220, 4},
      {944, 3, 116, 4},
      {944, 11, 116, 4},
      {946, 9, 105, 4},
      {948, 5, 78, 4},
      {948, 7, 78, 4},
      {948, 11, 78, 4},
      {948, 37, 78, 4},
      {952, 3, 48, 8},
      {952, 5, 48, 8},
      {952, 11, 48, 8},
      {952, 23, 48, 8},
      {952, 31, 48, 8},
      {952, 37, 48, 8},
      {952, 65, 48, 8},
      {952, 73, 48, 8},
      {954, 7, 78, 4},
      {955, 4, 190, 4},
      {955, 16, 95, 8},
      {956, 5, 119, 4},
      {957, 2, 140, 4},
      {957, 31, 140, 4},
      {959, 2, 204, 4},
      {963, 4, 159, 4},
      {964, 29, 120, 4},
      {966, 11, 66, 4},
      {966, 19, 66, 4},
      {966, 25, 33, 8},
      {966, 59, 66, 4},
      {968, 17, 110, 4},
      {968, 19, 110, 4},
      {968, 59, 110, 4},
      {978, 43, 81, 4},
      {979, 5, 220, 4},
      {980, 3, 84, 4},
      {980, 9, 42, 8},
      {980, 17, 84, 4},
      {987, 2, 138, 4},
      {987, 10, 138, 4},
      {987, 17, 138, 4},
      {987, 58, 138, 4},
      {989, 9, 231, 4},
      {990, 7, 60, 4},
      {990, 49, 30, 8},
      {990, 61, 30, 8},
      {990, 97, 60, 4},
      {992, 19, 120, 4},
      {992, 45, 120, 4},
      {993, 19, 165, 4},
      {995, 4, 198, 4},
      {996, 7, 82, 4},
      {996, 11, 82, 4},
      {996, 17, 82, 4},
      {1000, 13, 100, 4},
      {1000, 17, 100, 4},
  };
  return rows;
}

} // namespace gaussq
