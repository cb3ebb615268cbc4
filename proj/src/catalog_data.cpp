// Catalogue data: gluings in canonical form and published coordinates, with
// vertex i placed at cone point i of the gluing.

#include "catalog_data.hpp"

namespace pentaglue::detail {

const char* const kP22Gluing = R"(
pentagons 2
glue 0.0 0.1 flip
glue 0.2 1.0 flip
glue 0.3 1.2 flip
glue 0.4 1.1 flip
glue 1.3 1.4 flip
)";

const char* const kP22Embedding = R"(
vertex 0 -0.16391141696515857 0.476932200185524 0.0
vertex 1 -0.31405294951344975 0.8481487561449743 -0.9163273343621601
vertex 2 -0.16391141635587947 -0.47693220123372715 -0.0000091269006132692
vertex 3 0.7150286699726232 0.0 0.0
vertex 4 -0.31405295029381125 -0.8481662893257657 0.9163111045353434
edge 0 1
edge 0 3
edge 0 4
edge 1 2
edge 1 3
edge 1 4
edge 2 3
edge 2 4
edge 3 4
face 2 3 4
face 4 1 2
face 1 3 2
face 4 3 0
face 0 1 4
face 0 3 1
)";

const char* const kP41Gluing = R"(
pentagons 4
glue 0.0 1.0 flip
glue 0.1 1.4 flip
glue 0.2 1.3 flip
glue 0.3 2.0 flip
glue 0.4 3.0 flip
glue 1.1 3.4 flip
glue 1.2 2.1 flip
glue 2.2 3.3 flip
glue 2.3 3.2 flip
glue 2.4 3.1 flip
)";

const char* const kP41Embedding = R"(
vertex 0 0.43749429323987804 0.5168076669346257 0.0
vertex 1 1.2935958265860046 0.0 0.0
vertex 2 0.9070763359531865 -0.9222812387547359 -0.00000000515911
vertex 3 -0.06168951174342411 -0.6743039564170403 -0.0000000037373
vertex 4 -0.18790239082433305 0.07874814457929721 -0.6457420918350443
vertex 5 -0.18790239078823043 0.07874814099060924 0.6457420871720928
vertex 6 -1.1003360812402079 0.46114061650396965 0.5000000026587861
vertex 7 -1.1003360812768423 0.4611406221034601 -0.4999999973402255
edge 0 1
edge 0 4
edge 0 5
edge 0 6
edge 0 7
edge 1 2
edge 1 4
edge 1 5
edge 2 3
edge 2 4
edge 2 5
edge 3 4
edge 3 5
edge 3 6
edge 3 7
edge 4 7
edge 5 6
edge 6 7
face 2 1 5
face 3 2 5
face 4 1 2
face 7 4 3
face 4 2 3
face 5 1 0
face 0 4 7
face 0 1 4
face 0 7 6
face 6 5 0
face 6 7 3
face 3 5 6
)";

const char* const kP42Gluing = R"(
pentagons 4
glue 0.0 1.0 flip
glue 0.1 1.4 flip
glue 0.2 2.0 flip
glue 0.3 2.4 flip
glue 0.4 3.0 flip
glue 1.1 3.4 flip
glue 1.2 3.3 flip
glue 1.3 2.1 flip
glue 2.2 3.2 flip
glue 2.3 3.1 flip
)";

const char* const kP42Embedding = R"(
vertex 0 0.3535525197824853 -0.612376698215449 0.000002436489
vertex 1 1.1441186330689892 0.0 0.0
vertex 2 0.35355410836555906 0.612378749043792 0.0
vertex 3 -0.00000096041478 0.6605555441877259 -0.9341722591401773
vertex 4 -0.35355132602086625 -0.20413060947901404 -0.577352984617954
vertex 5 0.0000002051230056 -0.660552576215044 0.9341757852715699
vertex 6 -0.35355291484900464 0.204129462645888 0.5773492685115242
vertex 7 -1.1441193883103131 -0.0000043143566 -0.0000016231994
edge 0 1
edge 0 4
edge 0 5
edge 1 2
edge 1 3
edge 1 5
edge 2 3
edge 2 6
edge 3 4
edge 3 7
edge 4 7
edge 5 6
edge 5 7
edge 6 7
face 2 1 3
face 7 3 4
face 5 7 4 0
face 3 1 0 4
face 0 1 5
face 5 1 2 6
face 6 7 5
face 6 2 3 7
)";

const char* const kP43Gluing = R"(
pentagons 4
glue 0.0 0.1 flip
glue 0.2 1.0 flip
glue 0.3 2.0 flip
glue 0.4 1.1 flip
glue 1.2 2.4 flip
glue 1.3 3.0 flip
glue 1.4 2.1 flip
glue 2.2 3.4 flip
glue 2.3 3.1 flip
glue 3.2 3.3 flip
)";

const char* const kP43Embedding = R"(
vertex 0 1.1441197647858687 0.0 0.0
vertex 1 1.8512225918511154 0.408252018329011 0.577352475975189
vertex 2 0.353551189759604 -0.2041216031515996 0.5773523181800547
vertex 3 0.35355119655087724 0.6123735289175027 0.0
vertex 4 -0.35355163051439026 0.2041215106112333 -0.5773524759670514
vertex 5 -0.3535516373056661 -0.6123736214577439 -0.00000015778708221
vertex 6 -1.1441202055378052 -0.000000092541959995 -0.000000157789119
vertex 7 -1.8512230326059445 -0.40825211084630797 -0.5773526337782059
edge 0 1
edge 0 4
edge 0 5
edge 1 2
edge 1 3
edge 2 5
edge 2 6
edge 3 4
edge 3 6
edge 4 7
edge 5 7
edge 6 7
face 7 4 0 5
face 1 0 4 3
face 6 7 5 2
face 2 1 3 6
face 2 5 0 1
face 6 3 4 7
)";

const char* const kP6Gluing = R"(
pentagons 6
glue 0.0 1.0 flip
glue 0.1 1.4 flip
glue 0.2 2.0 flip
glue 0.3 3.0 flip
glue 0.4 4.0 flip
glue 1.1 4.4 flip
glue 1.2 5.0 flip
glue 1.3 2.1 flip
glue 2.2 5.4 flip
glue 2.3 3.2 flip
glue 2.4 3.1 flip
glue 3.3 5.3 flip
glue 3.4 4.1 flip
glue 4.2 5.2 flip
glue 4.3 5.1 flip
)";

const char* const kP6Embedding = R"(
vertex 0 0.7162308035620336 0.3787815383028905 -0.587786175174265
vertex 1 1.4310957967719642 0.0 0.0
vertex 2 0.7162308035616037 -0.37878153839618434 0.5877861751136217
vertex 3 0.15092235791116757 0.3787815381579165 0.9141671585035448
vertex 4 -0.0000000000001461 0.7549741064176964 0.0
vertex 5 0.15092235791177575 -0.3787815383030031 -0.9141671584442804
vertex 6 -0.0000000000001931 -0.7549741069521263 0.000000000221224
vertex 7 -0.8671531614092768 -0.37878153847290486 0.32638098324776055
vertex 8 -0.7155478985611488 -0.0000000003687175 1.2393653153533593
vertex 9 -0.8671531615396659 0.3787815383070919 -0.3263809830922096
vertex 10 -0.7155478984982786 0.00000000009007338 -1.2393653153906468
edge 0 1
edge 0 4
edge 0 5
edge 0 10
edge 1 2
edge 1 3
edge 1 4
edge 1 5
edge 1 6
edge 2 3
edge 2 6
edge 2 8
edge 3 4
edge 3 8
edge 4 8
edge 4 9
edge 4 10
edge 5 6
edge 5 10
edge 6 7
edge 6 8
edge 6 10
edge 7 8
edge 7 9
edge 7 10
edge 8 9
edge 9 10
face 4 9 8
face 4 10 9
face 6 1 2
face 6 2 8
face 5 1 6
face 6 10 5
face 8 7 6
face 6 7 10
face 9 7 8
face 10 7 9
face 3 1 4
face 4 8 3
face 2 1 3
face 8 2 3
face 4 1 0
face 4 0 10
face 0 1 5
face 10 0 5
)";

const char* const kP8Gluing = R"(
pentagons 8
glue 0.0 1.0 flip
glue 0.1 1.4 flip
glue 0.2 2.0 flip
glue 0.3 3.0 flip
glue 0.4 4.0 flip
glue 1.1 4.4 flip
glue 1.2 5.0 flip
glue 1.3 2.1 flip
glue 2.2 5.4 flip
glue 2.3 6.0 flip
glue 2.4 3.1 flip
glue 3.2 6.4 flip
glue 3.3 7.0 flip
glue 3.4 4.1 flip
glue 4.2 7.4 flip
glue 4.3 5.1 flip
glue 5.2 7.3 flip
glue 5.3 6.1 flip
glue 6.2 7.2 flip
glue 6.3 7.1 flip
)";

const char* const kP8Embedding = R"(
vertex 0 1.0741858668825588 0.3774601538724013 0.5795877841641639
vertex 1 1.7964059390811467 0.0 0.0
vertex 2 1.0741858668825224 -0.3774601544164369 -0.5795877838098117
vertex 3 0.4627696824462251 -0.9162070816198993 -0.000000000674378481
vertex 4 0.4627696824462514 -0.37047892722529857 0.8379622805377634
vertex 5 0.4627696824461601 0.9162070813351211 0.0
vertex 6 0.46276968244613376 0.37047892643871677 -0.8379622808853392
vertex 7 -0.462769682167164 0.0000000011376730667 -0.9162070817606903
vertex 8 -0.4627696825916457 -0.8379622802654594 -0.3704789276593546
vertex 9 -1.0741858671205824 -0.579587784025112 0.3774601534086557
vertex 10 -0.46276968266375634 -0.0000000009484149785 0.9162070812362096
vertex 11 -0.4627696822356244 0.8379622786720125 0.3704789273536469
vertex 12 -1.0741858665333857 0.5795877843576744 -0.3774601545686791
vertex 13 -1.796405938942955 0.0000000000684636823 -0.00000000034584134394
edge 0 1
edge 0 4
edge 0 5
edge 0 10
edge 0 11
edge 1 2
edge 1 3
edge 1 4
edge 1 5
edge 1 6
edge 2 3
edge 2 6
edge 2 7
edge 2 8
edge 3 4
edge 3 8
edge 3 9
edge 4 9
edge 4 10
edge 5 6
edge 5 11
edge 5 12
edge 6 7
edge 6 12
edge 7 8
edge 7 12
edge 7 13
edge 8 9
edge 8 13
edge 9 10
edge 9 13
edge 10 11
edge 10 13
edge 11 12
edge 11 13
edge 12 13
face 7 8 13
face 2 1 3
face 2 3 8
face 8 7 2
face 3 1 4
face 10 9 4
face 13 9 10
face 8 9 13
face 3 9 8
face 4 9 3
face 6 1 2
face 5 1 6
face 2 7 6
face 4 0 10
face 4 1 0
face 0 1 5
face 13 12 7
face 6 7 12
face 6 12 5
face 10 0 11
face 11 0 5
face 12 11 5
face 13 10 11
face 13 11 12
)";

const char* const kP12Gluing = R"(
pentagons 12
glue 0.0 1.0 flip
glue 0.1 2.0 flip
glue 0.2 3.0 flip
glue 0.3 4.0 flip
glue 0.4 5.0 flip
glue 1.1 5.4 flip
glue 1.2 6.0 flip
glue 1.3 7.0 flip
glue 1.4 2.1 flip
glue 2.2 7.4 flip
glue 2.3 8.0 flip
glue 2.4 3.1 flip
glue 3.2 8.4 flip
glue 3.3 9.0 flip
glue 3.4 4.1 flip
glue 4.2 9.4 flip
glue 4.3 10.0 flip
glue 4.4 5.1 flip
glue 5.2 10.4 flip
glue 5.3 6.1 flip
glue 6.2 10.3 flip
glue 6.3 11.0 flip
glue 6.4 7.1 flip
glue 7.2 11.4 flip
glue 7.3 8.1 flip
glue 8.2 11.3 flip
glue 8.3 9.1 flip
glue 9.2 11.2 flip
glue 9.3 10.1 flip
glue 10.2 11.1 flip
)";

const char* const kP21Gluing = R"(
pentagons 2
glue 0.0 1.0 flip
glue 0.1 1.4 flip
glue 0.2 1.3 flip
glue 0.3 1.2 flip
glue 0.4 1.1 flip
)";

const int kP12Points[20] = {0, 10, 1, 11, 8, 9, 2, 13, 3, 12, 18, 5, 16, 4, 15, 6, 14, 17, 7, 19};

const int kP12Faces[12][5] = {
    {17, 16, 15, 19, 18},
    {15, 16, 6, 5, 14},
    {15, 14, 13, 12, 19},
    {11, 3, 2, 9, 10},
    {10, 9, 8, 17, 18},
    {19, 12, 11, 10, 18},
    {8, 9, 2, 1, 7},
    {8, 7, 6, 16, 17},
    {7, 1, 0, 5, 6},
    {11, 12, 13, 4, 3},
    {3, 4, 0, 1, 2},
    {14, 5, 0, 4, 13}};

}  // namespace pentaglue::detail
