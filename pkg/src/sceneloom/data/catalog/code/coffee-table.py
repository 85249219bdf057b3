"""Coffee Table generator (Indoors)."""

PARAMS = {
    "size": 3.325,
    "detail": 2,
    "roughness": 0.209,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Coffee Table"
    for key, value in params.items():
        node[key] = value
    return node
