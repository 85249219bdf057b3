"""Desert Sand Material generator (Materials)."""

PARAMS = {
    "size": 2.706,
    "detail": 2,
    "roughness": 0.584,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Desert Sand Material"
    for key, value in params.items():
        node[key] = value
    return node
