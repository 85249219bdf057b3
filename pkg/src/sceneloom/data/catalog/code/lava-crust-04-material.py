"""Lava Crust 04 Material generator (Materials)."""

PARAMS = {
    "size": 0.754,
    "detail": 3,
    "roughness": 0.353,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Lava Crust 04 Material"
    for key, value in params.items():
        node[key] = value
    return node
