"""Lava Crust 09 Material generator (Materials)."""

PARAMS = {
    "size": 3.536,
    "detail": 3,
    "roughness": 0.981,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Lava Crust 09 Material"
    for key, value in params.items():
        node[key] = value
    return node
