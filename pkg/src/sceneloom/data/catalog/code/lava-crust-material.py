"""Lava Crust Material generator (Materials)."""

PARAMS = {
    "size": 2.463,
    "detail": 2,
    "roughness": 0.843,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Lava Crust Material"
    for key, value in params.items():
        node[key] = value
    return node
