"""Print the Garnir data and Garnir elements for the shape 1|7,7,4,1 at e = 2."""

from klrspecht import GroundData, Node, garnir_element, parse_shape

g = GroundData(2, (0, 0))
mu = parse_shape("1|7,7,4,1")

for node, orientation in ((Node(2, 3, 2), "row"), (Node(3, 1, 2), "column")):
    ge = garnir_element(mu, node, orientation, g)
    data = ge.data
    print(f"{orientation} Garnir node {node}")
    print(f"  k={data.k} f={data.f} n={data.n} u={data.u} v={data.v}")
    print(f"  Garnir tableau: {data.garnir_tableau.to_text()}")
    print(f"  top tableau:    {data.top_tableau.to_text()}")
    print(f"  Gar has {len(data.gar)} tableaux; coset words {list(data.coset_words)}")
    print(f"  Garnir element: {len(ge.element.terms)} terms of degree {ge.degree}")
