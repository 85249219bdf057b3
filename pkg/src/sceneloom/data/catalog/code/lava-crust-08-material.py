"""Lava Crust 08 Material generator (Materials)."""

PARAMS = {
    "size": 1.695,
    "detail": 3,
    "roughness": 0.595,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Lava Crust 08 Material"
    for key, value in params.items():
        node[key] = value
    return node
