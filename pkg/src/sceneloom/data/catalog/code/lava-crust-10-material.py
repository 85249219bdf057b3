"""Lava Crust 10 Material generator (Materials)."""

PARAMS = {
    "size": 3.402,
    "detail": 1,
    "roughness": 0.549,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Lava Crust 10 Material"
    for key, value in params.items():
        node[key] = value
    return node
