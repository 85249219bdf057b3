"""Lava Crust 03 Material generator (Materials)."""

PARAMS = {
    "size": 2.183,
    "detail": 4,
    "roughness": 0.823,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Lava Crust 03 Material"
    for key, value in params.items():
        node[key] = value
    return node
