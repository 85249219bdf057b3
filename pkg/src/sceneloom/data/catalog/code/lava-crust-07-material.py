"""Lava Crust 07 Material generator (Materials)."""

PARAMS = {
    "size": 1.212,
    "detail": 3,
    "roughness": 0.386,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Lava Crust 07 Material"
    for key, value in params.items():
        node[key] = value
    return node
