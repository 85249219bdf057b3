"""Lava Crust 05 Material generator (Materials)."""

PARAMS = {
    "size": 3.21,
    "detail": 1,
    "roughness": 0.768,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Lava Crust 05 Material"
    for key, value in params.items():
        node[key] = value
    return node
